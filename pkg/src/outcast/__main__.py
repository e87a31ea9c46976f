from outcast.cli import run

run()
