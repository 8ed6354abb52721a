from .state_file import load_state_set, save_state_set
from .machine_file import MachineCheckpointer, load_machine, save_machine
