"""Reading and writing instance files (JSON, UTF-8).

    {"kind": "hidden-point", "n": 7, "k": 2, "a": [2, 4]}
    {"kind": "table", "n": 2, "k": 2, "rows": [[0, 0, 0, 0], ...]}
    {"kind": "clamp-lift", "n": 4, "inner": {...}}
"""
import json
import logging

from .hidden_point import HiddenPointInstance
from .table import TableInstance
from .transforms import ClampLiftOracle
from ..errors import InstanceFormatError, TarskiSearchError
from ..lattice import GridShape

logger = logging.getLogger(__name__)


def _int_field(doc, name, path):
    field = path + name
    if name not in doc:
        raise InstanceFormatError('missing required field', field=field)
    value = doc[name]
    if isinstance(value, bool) or not isinstance(value, int):
        raise InstanceFormatError('expected an integer, got %r' % (value, ),
                                  field=field)
    return value


def _shape(doc, path, k=None):
    n = _int_field(doc, 'n', path)
    if k is None:
        k = _int_field(doc, 'k', path)
    try:
        return GridShape(n, k)
    except ValueError as e:
        raise InstanceFormatError(str(e), field=path + 'n')


def instance_from_dict(doc, path=''):
    """Builds an oracle from a decoded instance document."""
    if not isinstance(doc, dict):
        raise InstanceFormatError('instance must be a JSON object',
                                  field=path.rstrip('.') or None)
    kind = doc.get('kind')
    try:
        if kind == HiddenPointInstance.kind:
            shape = _shape(doc, path)
            if not isinstance(doc.get('a'), list):
                raise InstanceFormatError('expected a list of coordinates',
                                          field=path + 'a')
            try:
                return HiddenPointInstance(shape, doc['a'])
            except (TypeError, ValueError) as e:
                raise InstanceFormatError(str(e), field=path + 'a')
        elif kind == TableInstance.kind:
            shape = _shape(doc, path)
            if not isinstance(doc.get('rows'), list):
                raise InstanceFormatError('expected a list of rows',
                                          field=path + 'rows')
            try:
                return TableInstance.from_rows(shape, doc['rows'])
            except (TypeError, ValueError) as e:
                raise InstanceFormatError(str(e), field=path + 'rows')
        elif kind == ClampLiftOracle.kind:
            n = _int_field(doc, 'n', path)
            if 'inner' not in doc:
                raise InstanceFormatError('missing required field',
                                          field=path + 'inner')
            inner = instance_from_dict(doc['inner'], path + 'inner.')
            return ClampLiftOracle(inner, n)
    except InstanceFormatError:
        raise
    except (TarskiSearchError, TypeError, ValueError) as e:
        raise InstanceFormatError(str(e), field=path.rstrip('.') or None)
    raise InstanceFormatError(
        'unknown instance kind %r (expected hidden-point, table or '
        'clamp-lift)' % (kind, ),
        field=path + 'kind')


def loads_instance(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceFormatError('invalid JSON: %s' % e.msg, line=e.lineno)
    return instance_from_dict(doc)


def load_instance(path):
    """Reads an instance file and returns the corresponding oracle."""
    logger.debug('loading instance from %s', path)
    with open(path, encoding='utf-8') as f:
        try:
            text = f.read()
        except UnicodeDecodeError:
            raise InstanceFormatError('%s is not valid UTF-8' % path)
    return loads_instance(text)


def dump_instance(inst, path):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        json.dump(inst.to_dict(), f)
        f.write('\n')
