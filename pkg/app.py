import logging
import os

from dotenv import load_dotenv
from flask import Flask
from flask_cors import CORS
from mongoengine import connect

from celery_app import make_celery
from routes.decomposition.decompose import decompose_bp
from routes.graphs.generate import generate_bp
from routes.graphs.orient import orient_bp
from routes.spectral.bounds import bounds_bp
from routes.spectral.rho import rho_bp
from routes.tessellation.analyze import tessellation_bp
from routes.verification.verify import verify_bp
from utils.cli import TOOLKIT_VERSION

# Load environment variables
load_dotenv()

CELERY_BROKER_URL = os.getenv("CELERY_BROKER_URL", "redis://localhost:6379/0")
CELERY_RESULT_BACKEND = os.getenv("CELERY_RESULT_BACKEND", "redis://localhost:6379/1")


def _flag(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).lower() in ("1", "true", "yes")


def create_app(overrides: dict = None):
    app = Flask(__name__)

    # Flask config
    CORS(app, resources={r"/*": {"origins": "*"}})
    app.config["SECRET_KEY"] = os.getenv("SECRET_KEY", "fallback-secret")
    app.config["MONGO_URI"] = os.getenv("MONGO_URI")
    app.config["LOG_LEVEL"] = os.getenv("LOG_LEVEL", "INFO")
    # Celery config so the worker and app share settings
    app.config["CELERY_BROKER_URL"] = CELERY_BROKER_URL
    app.config["CELERY_RESULT_BACKEND"] = CELERY_RESULT_BACKEND
    app.config["CELERY_TASK_ALWAYS_EAGER"] = _flag("CELERY_TASK_ALWAYS_EAGER")
    app.config.update(overrides or {})

    logging.basicConfig(
        level=app.config["LOG_LEVEL"],
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    # Run storage is optional; everything else works without MongoDB
    if app.config["MONGO_URI"]:
        connect(host=app.config["MONGO_URI"])

    make_celery(app)

    # Register blueprints
    app.register_blueprint(generate_bp, url_prefix="/graphs/generate")
    app.register_blueprint(orient_bp, url_prefix="/graphs/orient")
    app.register_blueprint(rho_bp, url_prefix="/spectral/rho")
    app.register_blueprint(bounds_bp, url_prefix="/bounds")
    app.register_blueprint(decompose_bp, url_prefix="/decompose")
    app.register_blueprint(tessellation_bp, url_prefix="/tessellation")
    app.register_blueprint(verify_bp, url_prefix="/verify")

    @app.route("/")
    def home():
        return {"message": "Spectral bounds toolkit is running", "version": TOOLKIT_VERSION}

    return app


if __name__ == "__main__":
    app = create_app()
    app.run(debug=True)
