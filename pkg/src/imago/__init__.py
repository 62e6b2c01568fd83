"""Image ratios |w(A)|/|A| of word maps on finite groups and polynomial maps on finite rings."""

from .closed_forms import (
    abelian_power_ratio,
    admissible_exponents,
    commutator_cyclic_ratio,
    engel_sl2_conjectural_ratio,
    gl2_power_image_size,
    gl2_power_ratio,
)
from .config import DEFAULT_LIMITS, Limits
from .errors import CapExceeded, ImagoError, ParseError, PreconditionError
from .fields import BigRatio, FieldSpec, FqElem, Mat2, make_field
from .groups import (
    GL2,
    SL2,
    ConjClass,
    Cyclic,
    Product,
    conjugacy_classes_bruteforce,
    enumerate_group,
    format_group_spec,
    get_group,
    gl2_class_reps,
    group_order,
    parse_group_spec,
    product,
)
from .image import ImageReport, image, ratio, scan
from .planner import RatioPlan, approximate, closed_form_ratio, plan_ratio, realize
from .rings import (
    Mat2Ring,
    NCPoly,
    RingProduct,
    ZmodN,
    gl2ring_square_closed_forms,
    parse_poly,
    parse_ring_spec,
    poly_evaluate,
    poly_image,
    poly_image_ratio,
    ring_product,
)
from .words import Word, abelianize, commutator, engel, evaluate, format_word, parse_word, power_word

__version__ = "0.1.0"
