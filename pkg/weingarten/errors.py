class WeingartenError(Exception):
    """
    Базовое исключение пакета.

    Атрибут ``exit_code`` используется командной строкой как код возврата.
    """

    exit_code = 1


class UsageError(WeingartenError):
    """Некорректные аргументы или параметры вызова."""

    exit_code = 2


class NumericalError(WeingartenError):
    """Ошибка численного характера: геометрия, квадратуры, решатели."""

    exit_code = 3


class DataIOError(WeingartenError):
    """Ошибка чтения или записи файлов."""

    exit_code = 4


class ParseError(DataIOError):
    """Файл сетки, поля или пары имеет некорректный формат."""


# geometry-core
class RegularityError(NumericalError):
    """Параметризация вырождена: EG - F^2 <= 0 или |z_u x z_v| мала."""


class NotPrincipalError(NumericalError):
    """Параметры не являются главными: F или M превышают допуск."""


class UmbilicError(NumericalError):
    """На сетке есть омбилические точки (nu1 = nu2)."""


class UnknownSurfaceError(UsageError):
    """Неизвестное имя аналитической поверхности."""


# weingarten-natural
class DomainError(NumericalError):
    """Значение nu вне интервала пары или подынтегральная функция вырождена."""


class QuadratureError(NumericalError):
    """Квадратура не достигла заданной точности."""


class FitError(NumericalError):
    """Поверхность не является W-поверхностью для заданной пары."""


class MonotonicityError(NumericalError):
    """Новые параметры не возрастают строго монотонно."""


class InvalidPairError(NumericalError):
    """Пара (f, g) нарушает условия f - g != 0 или f'g' != 0 на интервале."""


# parallel-family
class SingularOffsetError(NumericalError):
    """Сдвиг пересекает фокальное множество: (1 - a nu1)(1 - a nu2) = 0."""


# linear-class
class DegenerateRelationError(NumericalError):
    """Дискриминант линейного соотношения равен нулю."""


# natural-pde
class ReciprocalSingularityError(NumericalError):
    """Обратная величина поля не определена (значение близко к нулю)."""


class NonConvergenceError(NumericalError):
    """Метод Ньютона не сошёлся за допустимое число итераций."""

    def __init__(self, message: str, history=None):
        super().__init__(message)
        self.history = list(history or [])


class RangeViolationError(NumericalError):
    """Итерация вышла из области монотонности преобразования w."""


class CFLError(NumericalError):
    """Нарушено условие Куранта: dy > dx."""


class OperatorKindError(UsageError):
    """Решатель не поддерживает данный тип оператора."""


# generators
class RangeError(NumericalError):
    """Решение ОДУ покинуло допустимую область (nu -> 0 или рост без границ)."""


class SmoothnessError(NumericalError):
    """Поверхность класса Gamma не гладкая в узлах сетки."""


class PDEResidualError(NumericalError):
    """Поле nu не удовлетворяет натуральному уравнению с нужной точностью."""


class CompatibilityError(NumericalError):
    """Интегрирование репера по двум порядкам даёт разные поверхности."""


class InvariantCheckError(NumericalError):
    """Кривизны построенной поверхности расходятся с ожидаемыми инвариантами."""
