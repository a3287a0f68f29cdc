from .field import FieldElement, FieldSpec, add, enumerate_field, inv, mul, power
from .ideal import (
    BezoutWitness,
    Ideal,
    MembershipCertificate,
    ProductSumCheck,
    RabinowitschLift,
    bezout_witness,
    product_sum_identities,
    rabinowitsch_certificate,
    rabinowitsch_lift,
    vanishing_ideal,
)
from .polynomial import Polynomial, divmod_univariate, univariate_ext_gcd
from .ring import (
    PointSet,
    RingElement,
    SubsetOfS,
    embed,
    ideal_of_pointset,
    indicator,
    interpolate,
    subset_indicator,
)

__all__ = [
    "FieldElement",
    "FieldSpec",
    "add",
    "enumerate_field",
    "inv",
    "mul",
    "power",
    "BezoutWitness",
    "Ideal",
    "MembershipCertificate",
    "ProductSumCheck",
    "RabinowitschLift",
    "bezout_witness",
    "product_sum_identities",
    "rabinowitsch_certificate",
    "rabinowitsch_lift",
    "vanishing_ideal",
    "Polynomial",
    "divmod_univariate",
    "univariate_ext_gcd",
    "PointSet",
    "RingElement",
    "SubsetOfS",
    "embed",
    "ideal_of_pointset",
    "indicator",
    "interpolate",
    "subset_indicator",
]
