import dataclasses
import json
from typing import Dict, Iterable

from parapy.framework.scalar import Rational, format_rational


class Config2JSONEncoder(json.JSONEncoder):
    """Dataclasses become dicts, exact rationals become "num/den" strings, anything else its str()."""

    def default(self, o):
        if isinstance(o, Rational):
            return format_rational(o)
        try:
            if dataclasses.is_dataclass(o):
                return dataclasses.asdict(o)
            return super().default(o)
        except TypeError:
            return str(o)


def config2json(config: dataclasses.dataclass) -> str:
    return json.dumps(obj=config, cls=Config2JSONEncoder)


def config2dict(config: dataclasses.dataclass, exclude: Iterable[str] = ()) -> Dict:
    data = json.loads(config2json(config=config))
    for key in exclude:
        data.pop(key, None)
    return data
