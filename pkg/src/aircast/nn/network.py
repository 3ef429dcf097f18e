"""A plain sequential container over the layer primitives."""

from ..errors import NoForwardCacheError


class Network:
    """Runs layers in order; backward requires a prior caching forward."""

    def __init__(self, layers):
        self.layers = list(layers)
        self._ran_forward = False

    def forward(self, x, train=False):
        for layer in self.layers:
            x = layer.forward(x, train=train)
        if train:
            self._ran_forward = True
        return x

    def backward(self, grad):
        """Propagate the loss gradient; fills every layer's param grads."""
        if not self._ran_forward:
            raise NoForwardCacheError("backward() requires forward(train=True) first")
        for layer in reversed(self.layers):
            grad = layer.backward(grad)
        return grad

    def params(self):
        return [p for layer in self.layers for p in layer.params()]

    def grads(self):
        return [g for layer in self.layers for g in layer.grads()]

    def param_names(self):
        names = []
        for k, layer in enumerate(self.layers):
            for n in layer.param_names():
                names.append(f"layer{k}.{type(layer).__name__}.{n}")
        return names
