#!/usr/bin/env python
"""Django's command-line utility for the multdep toolkit."""

import os
import sys
from dotenv import load_dotenv


def _note(message):
    # stdout is reserved for results
    print(message, file=sys.stderr)


def main():
    """Run administrative tasks and toolkit commands."""
    dotenv_path = os.path.join(os.path.dirname(__file__), ".env")
    verbose = os.environ.get("MULTDEP_VERBOSE_STARTUP", "") == "True"
    if os.path.exists(dotenv_path):
        load_dotenv(dotenv_path)
        if verbose:
            _note(f"Loaded environment variables from: {dotenv_path}")

    # Determine the settings module based on ENVIRONMENT in .env
    settings_module = os.environ.get("DJANGO_SETTINGS_MODULE")
    environment = os.environ.get("ENVIRONMENT", "").strip().lower()
    if not settings_module:
        if environment == "production":
            settings_module = "project.settings.production"
        elif environment == "test":
            settings_module = "project.settings.test"
        else:
            settings_module = "project.settings.development"
            if environment not in ("", "development", "dev"):
                _note(
                    f"Warning: Unrecognized ENVIRONMENT '{environment}', defaulting to development settings."
                )
        os.environ["DJANGO_SETTINGS_MODULE"] = settings_module

    if verbose:
        _note(f"DJANGO_SETTINGS_MODULE: {settings_module}")
        if settings_module.endswith("production"):
            _note("\n=== USING PRODUCTION SETTINGS ===\n")
        elif settings_module.endswith("test"):
            _note("\n=== USING TEST SETTINGS ===\n")
        elif settings_module.endswith("development"):
            _note("\n=== USING DEVELOPMENT SETTINGS ===\n")
        else:
            _note("\n=== USING CUSTOM/UNKNOWN SETTINGS ===\n")

    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
