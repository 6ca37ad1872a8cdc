from laqc.cli import run

run()
