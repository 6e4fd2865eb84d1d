# utils/response.py
import logging
from functools import wraps

from flask import jsonify

from utils.errors import ToolkitError

logger = logging.getLogger(__name__)


def response(success: bool, message: str, data=None):
    return jsonify({
        "success": success,
        "message": message,
        "data": data
    })


def api_errors(f):
    """Toolkit errors become 400 responses carrying the error JSON; anything else is a 500."""
    @wraps(f)
    def decorated(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ToolkitError as e:
            return response(False, e.message, e.to_json()), 400
        except Exception as e:
            logger.exception("Unhandled error in %s", f.__name__)
            return response(False, f"An error occurred: {str(e)}"), 500

    return decorated
