"""
工具层单元测试初始化文件
"""