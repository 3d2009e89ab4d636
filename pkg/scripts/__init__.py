"""
脚本包初始化文件
"""