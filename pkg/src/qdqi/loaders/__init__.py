"""配置和实例加载器"""

from qdqi.loaders.config_loader import load_config
from qdqi.loaders.instance_loader import dump_instance, load_instance, parse_instance, save_instance

__all__ = [
    "dump_instance",
    "load_config",
    "load_instance",
    "parse_instance",
    "save_instance",
]
