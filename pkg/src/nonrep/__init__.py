"""Repetition-free words and the morphisms that preserve them."""
from ._scan import Kind
from .avoid import (AvoidanceQuery, ExhaustedAt, OpenAt, avoidance_by_morphism,
                    max_avoiding, verify_avoidance)
from .classify import (ClassifyConfig, MorphismReport, PropertyDecision, ProvenFalse,
                       ProvenTrue, RefutedBy, VerifiedUpTo, audit_refutation,
                       check_bounded, classify, decide_squarefree,
                       thue_necessary_conditions)
from .io import (load_fixture, parse_morphism, parse_word, render_morphism,
                 render_word, ternary_morphism)
from .morphisms import (FixedPointStream, FragmentDecomposition, Morphism, apply,
                        canonical_fragments, fixed_point_prefix, fixed_point_seeds,
                        is_cyclic, uniform_rank)
from .words import (BINARY, TERNARY, Alphabet, Property, RepetitionWitness, Word, find_all_kinds,
                    enumerate_words, find_cube, find_overlap, find_square,
                    find_weak_square, is_decreasing, is_increasing, shift)

__version__ = "0.1.0"
