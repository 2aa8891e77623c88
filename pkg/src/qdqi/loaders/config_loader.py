"""YML配置加载器"""

import os
from pathlib import Path

import yaml
from pydantic import ValidationError

from qdqi.core.config import CONFIG_ENV, QdqiConfig


def _field_errors(error: ValidationError) -> str:
    """把 pydantic 错误压成 `tolerances.gauss: 原因` 的列表"""
    return "; ".join(f"{'.'.join(str(part) for part in item['loc'])}: {item['msg']}" for item in error.errors())


def load_config(config_path: str | Path | None = None) -> QdqiConfig:
    """
    加载qdqi的YAML配置文件

    未给出路径时读取环境变量 QDQI_CONFIG，两者都没有则返回全部默认值
    （容差、预算 10^7、输出 console+json）。

    Args:
        config_path: 配置文件路径

    Returns:
        QdqiConfig对象

    Raises:
        FileNotFoundError: 配置文件不存在
        ValueError: YAML 无法解析、内容为空、顶层不是映射或字段取值非法
    """
    source = "--config"
    if config_path is None:
        config_path = os.environ.get(CONFIG_ENV) or None
        source = CONFIG_ENV
    if config_path is None:
        return QdqiConfig()

    config_path = Path(config_path)
    if not config_path.is_file():
        raise FileNotFoundError(f"qdqi配置文件不存在: {config_path}（来自 {source}）")

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            config_dict = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ValueError(f"配置文件 {config_path} 不是合法的YAML: {e}") from e

    if not config_dict:
        raise ValueError(f"配置文件为空: {config_path}")
    if not isinstance(config_dict, dict):
        raise ValueError(f"配置文件 {config_path} 顶层必须是映射（log / tolerances / output / enumeration_budget / seed）")

    try:
        return QdqiConfig(**config_dict)
    except ValidationError as e:
        raise ValueError(f"配置格式错误 ({config_path}): {_field_errors(e)}") from e
