from hampic.cli.core import app

app(prog_name="hampic")
