import json


class PairData:
    """
    Описание пары Вайнгартена в формате файла --pair.
    """

    def __init__(self, kind: str = "minimal", interval: tuple = (0.1, 1.5), **params):
        """
        :param kind: Вид пары из PAIR_KINDS.
        :param interval: Интервал допустимых значений nu.
        :param params: Параметры пары (H, A, B, C, D, alpha, ...).
        """
        self.kind = kind
        self.interval = list(interval)
        self.params = params

        self.data = {
            "kind": self.kind,
            "interval": self.interval,
            **self.params,
        }

    def write(self, path):
        path.write_text(json.dumps(self.data), encoding="utf-8")
        return path
