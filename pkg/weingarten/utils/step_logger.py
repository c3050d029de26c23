import functools
import logging
import time

logger = logging.getLogger("weingarten.steps")


class StepLogger:
    """
    Вспомогательный класс для логирования шагов вычислений.

    Логи выводятся в понятном формате, что упрощает отслеживание
    последовательности этапов расчёта (решатели, реконструкция, команды CLI).
    """

    def __init__(self, step_message: str):
        """
        Инициализация логгера с сообщением о текущем шаге.

        :param step_message: Описание выполняемого шага.
        """
        self.step_message = step_message
        self._started = None

    def __enter__(self):
        """
        Логирует сообщение при входе в контекст.

        :return: self
        """
        logger.info(f"{self.step_message}")
        self._started = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        """
        Логирует ошибку, если при выходе из контекста произошло исключение.

        :return: False (исключения продолжают распространяться).
        """
        if exc_type is None:
            logger.debug(f"Шаг завершён за {time.perf_counter() - self._started:.3f} с: {self.step_message}")
        else:
            logger.error(f"ОШИБКА на шаге: {self.step_message} ({exc_type.__name__}: {exc_value})")
        return False


def step(step_message: str):
    """
    Декоратор для логирования шага вычислений.

    :param step_message: Сообщение, описывающее шаг.
    :return: Обёртка вокруг декорируемой функции с логированием.
    """
    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            with StepLogger(step_message):
                return func(*args, **kwargs)
        return wrapper
    return decorator
