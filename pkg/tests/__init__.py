# 测试代码

