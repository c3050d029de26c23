import functools
import logging
import time
import uuid

test_logger = logging.getLogger("weingarten.tests")


def TestMetadata(name: str, id: str):
    """
    Декоратор метаданных теста: название, UUID и время выполнения в логе.

    :param name: Название теста.
    :param id: Уникальный идентификатор теста (UUID).
    :return: Обёрнутая функция с логированием метаданных до и после запуска.
    :raises ValueError: Если id не является UUID.
    """
    test_id = str(uuid.UUID(id))

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            test_logger.info(f"\nНазвание: {name}\nID: {test_id}\n")
            started = time.perf_counter()
            result = func(*args, **kwargs)
            test_logger.info(f"Тест {test_id} выполнен за {time.perf_counter() - started:.2f} с")
            return result
        wrapper.test_name = name
        wrapper.test_id = test_id
        return wrapper
    return decorator
