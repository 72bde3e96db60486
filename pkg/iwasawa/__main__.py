"""
Invokes iwasawa when the iwasawa module is run as a script.
Example: python -m iwasawa verify-group --p 2
"""

from iwasawa.core import management

if __name__ == "__main__":
    management.execute_from_command_line()
