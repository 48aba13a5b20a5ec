# SPDX-FileCopyrightText: 2024 Blue Brain Project / EPFL
#
# SPDX-License-Identifier: AGPL-3.0-or-later

# Example python file needed to run the reproduction suite from an sbatch script.
#
# Author(s): degcones developers
# Last modified: 10/2026


import sys

from degcones.cli import SECTIONS, load_config, reproduce


def main_wrapper():
    """Main function wrapper for the reproduction suite when called from command line.
       Command line arguments:
         cfg_file (.json), section (optional, one of SECTIONS or 'all')
    """

    # Parse inputs
    args = sys.argv[1:]
    if len(args) < 1:
        print(f'Usage: {__file__} <cfg_file.json> [section]')
        sys.exit(2)

    cfg_file = args[0]
    if len(args) > 1 and args[1] != "all":
        assert args[1] in SECTIONS, f'ERROR: Section must be one of {", ".join(SECTIONS)} or all!'
        sections = [args[1]]
        out_suffix = args[1].replace(".", "_")
    else:
        sections = None
        out_suffix = "all"

    # Run the checks, one csv table per section job
    config = load_config(cfg_file)
    run = reproduce(config, sections)
    out_file = f"{config.out or './reproduce'}_{out_suffix}.csv"
    run.table().to_csv(out_file, index=False)
    print(f'{len(run.checks)} checks written to {out_file}')
    sys.exit(0 if run.passed else 1)


if __name__ == "__main__":
    main_wrapper()
