# 加载器测试

