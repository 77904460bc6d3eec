from refh.cli import run

run()
