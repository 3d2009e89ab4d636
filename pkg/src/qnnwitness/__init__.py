"""
qnnwitness 包的初始化文件
两比特量子神经网络纠缠指示器：密度矩阵演化、参数调度训练、相位校正与实验扫描
"""
__version__ = "1.0.0"
