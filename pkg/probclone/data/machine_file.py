import logging

import numpy as np

from probclone.errors import FileFormatError
from probclone.modeling.cloning_machine import INDEX_CONVENTION, machine_from_parts
from probclone.structures.states import StateSet, StateVector

from .state_file import decode_vector, encode_vector, read_json, require, write_json

FORMAT_NAME = "probclone-machine"
FORMAT_VERSION = 1


class MachineCheckpointer():
    """
    Saves and restores cloning machines as JSON. Every complex number is a
    [re, im] pair written with shortest round-trip float repr, so a
    save/load cycle is bit-exact. The unitary is stored row-major.
    """

    def __init__(self, logger=None):
        if logger is None:
            logger = logging.getLogger(__name__)
        self.logger = logger

    def save(self, machine, path):
        header = dict(
            system_dim=machine.system_dim,
            copies=machine.copies,
            n_states=machine.n_states,
            probe_dim=machine.probe_dim,
            eta=machine.eta,
            fill_state_index=machine.fill_state_index,
            index_convention=INDEX_CONVENTION,
        )
        document = dict(
            format=FORMAT_NAME,
            version=FORMAT_VERSION,
            header=header,
            states=[encode_vector(s.amplitudes) for s in machine.states],
            blank=encode_vector(machine.blank.amplitudes),
            constants=[encode_vector(row) for row in machine.constants.entries],
            unitary=encode_vector(machine.unitary.reshape(-1)),
        )
        self.logger.info("Saving cloning machine to {}".format(path))
        write_json(document, path)

    def load(self, path):
        self.logger.info("Loading cloning machine from {}".format(path))
        document = read_json(path)
        if require(document, "format", path, str) != FORMAT_NAME:
            raise FileFormatError(path, "format", "not a {} file".format(FORMAT_NAME))
        if require(document, "version", path, int) != FORMAT_VERSION:
            raise FileFormatError(path, "version", "unsupported version {}".format(
                document["version"]))
        header = require(document, "header", path, dict)
        return self._load_machine(document, header, path)

    def _load_machine(self, document, header, path):
        def field(key, kind):
            return require(header, key, path, kind, prefix="header.")

        system_dim = field("system_dim", int)
        copies = field("copies", int)
        n_states = field("n_states", int)
        probe_dim = field("probe_dim", int)
        eta = field("eta", (int, float))
        fill_state_index = field("fill_state_index", int)
        if field("index_convention", str) != INDEX_CONVENTION:
            raise FileFormatError(path, "header.index_convention",
                                  "expected {!r}".format(INDEX_CONVENTION))
        if probe_dim != n_states + 1:
            raise FileFormatError(path, "header.probe_dim",
                                  "expected n_states + 1 = {}".format(n_states + 1))

        rows = require(document, "states", path, list)
        if len(rows) != n_states:
            raise FileFormatError(path, "states", "has {} states, header says {}".format(
                len(rows), n_states))
        states = StateSet([
            self._state(decode_vector(r, path, "states[{}]".format(i), system_dim),
                        path, "states[{}]".format(i))
            for i, r in enumerate(rows)
        ])
        blank = self._state(
            decode_vector(require(document, "blank", path, list), path, "blank",
                          system_dim ** (copies - 1)),
            path, "blank")

        constant_rows = require(document, "constants", path, list)
        if len(constant_rows) != n_states:
            raise FileFormatError(path, "constants", "expected {} rows".format(n_states))
        constants = np.array([
            decode_vector(r, path, "constants[{}]".format(i), n_states)
            for i, r in enumerate(constant_rows)
        ], dtype=np.complex128).reshape(n_states, n_states)

        composite_dim = system_dim ** copies * probe_dim
        unitary = np.array(
            decode_vector(require(document, "unitary", path, list), path, "unitary",
                          composite_dim * composite_dim),
            dtype=np.complex128,
        ).reshape(composite_dim, composite_dim)

        return machine_from_parts(states, copies, float(eta), blank, constants, unitary,
                                  fill_state_index)

    @staticmethod
    def _state(amplitudes, path, field):
        try:
            return StateVector(amplitudes)
        except ValueError as e:
            raise FileFormatError(path, field, str(e))


def save_machine(machine, path):
    MachineCheckpointer().save(machine, path)


def load_machine(path):
    return MachineCheckpointer().load(path)
