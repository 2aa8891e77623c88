# qdqi - max-QUADSAT 上 DQI 的精确经典模拟与验证套件

__version__ = "0.1.0"
