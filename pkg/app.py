# app.py

from flask import Flask
from config import Config, configurar_logging
from extensions import db

app = Flask(__name__)
app.config.from_object(Config)
configurar_logging(app.config['LOG_LEVEL'])

db.init_app(app)

from forms import *
from models import *
from routes import *
from cli import cli

app.cli.add_command(cli, name='struve')

with app.app_context():
    db.create_all()

if __name__ == '__main__':
    app.run(debug=True)
