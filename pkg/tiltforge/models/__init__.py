from .path import Path
from .quiver import Arrow, Quiver, natural_key, dual_arrow_id
from .presentation import Relation, GradedPresentation
from .group import CyclicGroupData, FoldedVertex
from .table import AlgebraTable, BasisElement, CartanMatrix, Vector
from .homological import (LevelledStructure, LevelFailure, ResolutionTerm,
                          ProjectiveResolution, ExtTable, KoszulVerdict)
from .collection import EulerCollection, CoxeterVerdict, Matrix
from .report import ValidationReport, TiltReport, TiltInput
