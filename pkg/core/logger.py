import logging
from datetime import datetime
import os

from pythonjsonlogger.json import JsonFormatter

from core.configs import settings

logger = logging.getLogger(settings.APP_NAME)
logger.setLevel(settings.LOG_LEVEL)
logger.propagate = False

if settings.LOG_FORMAT == "json":
    formatter = JsonFormatter('%(asctime)s %(levelname)s %(message)s')
else:
    formatter = logging.Formatter('%(asctime)s - [%(levelname)s] - %(message)s')

# stdout carries reports only
stream_handler = logging.StreamHandler()
stream_handler.setFormatter(formatter)
logger.addHandler(stream_handler)

if settings.LOG_DIR:
    current_date = datetime.now().strftime("%d-%m-%Y")
    log_filename = f"{current_date}.log"
    log_dir = settings.LOG_DIR
    if not os.path.exists(log_dir):
        os.makedirs(log_dir, exist_ok=True)
    file_handler = logging.FileHandler(os.path.join(log_dir, log_filename))
    file_handler.setFormatter(formatter)
    logger.addHandler(file_handler)
