"""Exception hierarchy. Every error carries a stable ``code`` string."""


class CrystalError(Exception):
    code = "ERROR"


class InvalidType(CrystalError, ValueError):
    code = "INVALID_TYPE"


class FidelityOverflow(CrystalError):
    code = "FIDELITY_OVERFLOW"


class InternalConsistency(CrystalError):
    code = "INTERNAL_CONSISTENCY"


class DepthExceeded(CrystalError):
    code = "DEPTH_EXCEEDED"


class RootDatumMismatch(CrystalError, ValueError):
    code = "ROOTDATUM_MISMATCH"


class MalformedCrystal(CrystalError):
    code = "MALFORMED_CRYSTAL"


class StructureMismatch(CrystalError):
    code = "STRUCTURE_MISMATCH"


class NotInImage(CrystalError):
    code = "NOT_IN_IMAGE"


class ImageNotHighestWeight(CrystalError):
    code = "IMAGE_NOT_HW"
