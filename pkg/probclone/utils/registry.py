def _register_generic(module_dict, module_name, module):
    assert module_name not in module_dict, \
        "{} is already registered".format(module_name)
    module_dict[module_name] = module


class Registry(dict):
    '''
    A dictionary of named callables with a register helper.

    Registering is done either directly:
        EFFICIENCY_SOLVERS.register("eigen", max_efficiency_eigen)
    or as a decorator:
        @EFFICIENCY_SOLVERS.register("bisection")
        def max_efficiency_bisect(x1, xm, ...):
            ...

    Lookup goes through `get`, which names the known entries on a miss.
    '''

    def register(self, module_name, module=None):
        # used as function call
        if module is not None:
            _register_generic(self, module_name, module)
            return module

        # used as decorator
        def register_fn(fn):
            _register_generic(self, module_name, fn)
            return fn

        return register_fn

    def get(self, module_name):
        if module_name not in self:
            raise KeyError("Unknown entry {!r}, expected one of {}".format(
                module_name, sorted(self.keys())))
        return self[module_name]
