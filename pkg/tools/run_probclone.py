import sys

from probclone.engine.commands import main

if __name__ == '__main__':
    sys.exit(main())
