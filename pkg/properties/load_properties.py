"""
Given a property name, load the property check
"""

from properties.dynamics_properties import (
    Conservation,
    Decay,
    Determinism,
    LinearDispersion,
    LocalEnergyIdentity,
    OddEvenSymmetry,
    SolitaryWaveStationarity,
    VirialIdentity,
    VirialPositivity,
)
from properties.identity_properties import (
    ComparisonPrinciple,
    LocalEnergyRepresentation,
    NormEquivalence,
    ReflectionSymmetry,
    RepresentationIdentity,
    SQRewriteIdentity,
    WeightBounds,
)
from properties.parameter_properties import (
    BoundaryPoint,
    ChartRoundTrip,
    CoefficientPositivity,
    DispersionOnset,
    GroupVelocityPositive,
)
from properties.property_interface import PropertyCheck

PROPERTIES_DICT = {
    check.name: check
    for check in (
        ChartRoundTrip,
        DispersionOnset,
        BoundaryPoint,
        CoefficientPositivity,
        GroupVelocityPositive,
        WeightBounds,
        ComparisonPrinciple,
        NormEquivalence,
        RepresentationIdentity,
        SQRewriteIdentity,
        LocalEnergyRepresentation,
        ReflectionSymmetry,
        LinearDispersion,
        OddEvenSymmetry,
        SolitaryWaveStationarity,
        Conservation,
        VirialIdentity,
        LocalEnergyIdentity,
        VirialPositivity,
        Decay,
        Determinism,
    )
}


def load_property(property_name, settings) -> PropertyCheck:
    """
    Given the property name, load the property check
    """
    if property_name not in PROPERTIES_DICT:
        raise NotImplementedError(f"property {property_name} not implemented.")
    return PROPERTIES_DICT[property_name](settings)
