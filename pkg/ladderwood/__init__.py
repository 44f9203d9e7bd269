from ladderwood.api import __all__ as api_all_list
from ladderwood.api import * # noqa
from ladderwood import expr
from ladderwood.__about__ import __package_name__ as name, __version__


__all__ = ['expr', 'name', '__version__', *api_all_list]
