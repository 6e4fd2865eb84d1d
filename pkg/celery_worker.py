# celery_worker.py
from app import create_app

flask_app = create_app()
celery = flask_app.extensions["celery"]

import tasks.verify_tasks  # noqa: E402,F401  registers the tasks with the worker
