from networks.discrete_network import DiscreteNetwork, compile_discrete
from networks.dense_network import DenseNetwork, compile_dense

__all__ = ["DenseNetwork", "DiscreteNetwork", "compile_dense", "compile_discrete"]
