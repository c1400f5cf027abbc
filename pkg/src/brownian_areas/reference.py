"""Known small-index values used as fixed reference points.

These are the classical values of the moment sequences and moments for
n <= 4 (joint tables up to 3 x 3), transcribed once and compared by exact
equality with the computed ones.
"""
from __future__ import annotations

from fractions import Fraction as F

from .symconst import SymbolicConstant

_M = SymbolicConstant.monomial


def _q(q):
    return SymbolicConstant.rational(F(q))


def sqrt_2pi(q):
    return _M(F(q), a=3, c=1)


def sqrt_pi_over_2(q):
    return _M(F(q), a=-3, c=1)


def sqrt_2_over_pi(q):
    return _M(F(q), a=3, c=-1)


def sqrt_pi(q):
    return _M(F(q), c=1)


# sequence name (as in sequences.SequenceId) -> {index: value}
SEQUENCES = {
    "gamma": {0: -1, 1: 9, 2: 405, 3: 65610, 4: 21749715},
    "K": {0: F(-1, 2), 1: F(1, 8), 2: F(5, 64), 3: F(15, 128), 4: F(1105, 4096)},
    "Omega": {0: -1, 1: F(1, 2), 2: F(5, 4), 3: F(45, 4), 4: F(3315, 16)},
    "omega": {0: -1, 1: F(1, 2), 2: F(5, 8), 3: F(15, 8), 4: F(1105, 128)},
    "omegaStar": {0: F(-1, 2), 1: 1, 2: 5, 3: 60, 4: 1105},
    "sigma": {-1: F(-1, 2), 0: F(1, 4), 1: F(5, 16), 2: F(15, 16), 3: F(1105, 256)},
    "dW": {0: F(1, 6), 1: F(5, 36), 2: F(5, 36), 3: F(1105, 7776)},
    "cW": {1: F(5, 24), 2: F(5, 16), 3: F(1105, 1152)},
    "eBar": {0: 1, 1: 9, 2: 567, 3: 91854, 4: 28796229},
    "D": {0: 1, 1: F(1, 4), 2: F(7, 32), 3: F(21, 64), 4: F(1463, 2048)},
    "C_cif": {0: 1, 1: F(-1, 2), 2: F(7, 8), 3: F(-21, 8), 4: F(1463, 128)},
    "eBarStar": {0: 1, 1: 1, 2: 7, 3: 126, 4: 4389},
    "Dstar": {0: 1, 1: 2, 2: 14, 3: 168, 4: 2926},
    "betaAI": {0: 1, 1: F(41, 48), 2: F(9241, 4608), 3: F(5075225, 663552),
               4: F(5153008945, 127401984)},
    "L": {0: 1, 1: 1, 2: F(9, 4), 3: F(263, 32), 4: F(2709, 64)},
    "Lstar": {0: 1, 1: 8, 2: 144, 3: 4208, 4: 173376},
    "Q": {0: 1, 1: F(3, 4), 2: F(59, 32), 3: F(465, 64), 4: F(80175, 2048)},
    "Qstar": {0: 1, 1: 6, 2: 118, 3: 3720, 4: 160350},
    "W": {0: 1, 1: F(3, 2), 2: F(17, 4), 3: F(1107, 64), 4: F(2963, 32)},
    "Wstar": {0: 1, 1: 12, 2: 272, 3: 8856, 4: 379264},
    "Dplus": {0: 1, 1: F(1, 8), 2: F(3, 32), 3: F(71, 512), 4: F(633, 2048)},
    "DplusStar": {0: 1, 1: 1, 2: 6, 3: 71, 4: 1266},
    "Lplus": {0: 1, 1: F(1, 2), 2: F(17, 16), 3: F(251, 64), 4: F(20967, 1024)},
    "LplusStar": {0: 1, 1: 4, 2: 68, 3: 2008, 4: 83868},
}

JOINT = {
    "DplusMinus": [[1, F(1, 8), F(3, 32), F(71, 512)],
                   [F(1, 8), F(1, 32), F(13, 512), F(77, 2048)],
                   [F(3, 32), F(13, 512), F(43, 2048), F(255, 8192)],
                   [F(71, 512), F(77, 2048), F(255, 8192), F(3025, 65536)]],
    "LplusMinus": [[1, F(1, 2), F(17, 16), F(251, 64)],
                   [F(1, 2), F(1, 8), F(3, 16), F(149, 256)],
                   [F(17, 16), F(3, 16), F(109, 512), F(279, 512)],
                   [F(251, 64), F(149, 256), F(279, 512), F(9391, 8192)]],
}


def _moments():
    return {
        "Ex": [_q(1), sqrt_2pi(F(1, 4)), _q(F(5, 12)), sqrt_2pi(F(15, 128)), _q(F(221, 1008))],
        "Br": [_q(1), sqrt_pi_over_2(F(1, 4)), _q(F(7, 60)), sqrt_pi_over_2(F(21, 512)), _q(F(19, 720))],
        "Bm": [_q(1), sqrt_2_over_pi(F(2, 3)), _q(F(3, 8)), sqrt_2_over_pi(F(263, 630)), _q(F(903, 2560))],
        "Me": [_q(1), sqrt_pi_over_2(F(3, 4)), _q(F(59, 60)), sqrt_pi_over_2(F(465, 512)), _q(F(5345, 3696))],
        "Dm": [_q(1), sqrt_2_over_pi(1), _q(F(17, 24)), sqrt_2_over_pi(F(123, 140)), _q(F(2963, 3840))],
        "BrPlus": [_q(1), sqrt_pi_over_2(F(1, 8)), _q(F(1, 20)), sqrt_pi_over_2(F(71, 4096)),
                   _q(F(211, 18480))],
        "BmPlus": [_q(1), sqrt_2_over_pi(F(1, 3)), _q(F(17, 96)), sqrt_2_over_pi(F(251, 1260)),
                   _q(F(6989, 40960))],
    }


def _joint_moments():
    br = [[_q(1), sqrt_2pi(F(1, 16)), _q(F(1, 20)), sqrt_2pi(F(71, 8192))],
          [sqrt_2pi(F(1, 16)), _q(F(1, 120)), sqrt_2pi(F(13, 24576)), _q(F(1, 2880))],
          [_q(F(1, 20)), sqrt_2pi(F(13, 24576)), _q(F(43, 332640)), sqrt_2pi(F(17, 1835008))],
          [sqrt_2pi(F(71, 8192)), _q(F(1, 2880)), sqrt_2pi(F(17, 1835008)), _q(F(11, 3564288))]]
    bm = [[_q(1), sqrt_2_over_pi(F(1, 3)), _q(F(17, 96)), sqrt_2_over_pi(F(251, 1260))],
          [sqrt_2_over_pi(F(1, 3)), _q(F(1, 96)), sqrt_2_over_pi(F(1, 315)), _q(F(149, 122880))],
          [_q(F(17, 96)), sqrt_2_over_pi(F(1, 315)), _q(F(109, 368640)), sqrt_2_over_pi(F(31, 300300))],
          [sqrt_2_over_pi(F(251, 1260)), _q(F(149, 122880)), sqrt_2_over_pi(F(31, 300300)),
           _q(F(9391, 660602880))]]
    return {"Br": br, "Bm": bm}


MOMENTS = _moments()
JOINT_MOMENTS = _joint_moments()

# E A^k with A = 2^(3/2) B_ex, and the Cifarelli moments m_n = (2 sqrt 2)^n E B_br^n
AIRY_CONSTANT_MOMENTS = [_q(1), sqrt_pi(1), _q(F(10, 3)), sqrt_pi(F(15, 4)), _q(F(884, 63))]
CIFARELLI_M = [_q(1), sqrt_pi(F(1, 2)), _q(F(14, 15)), sqrt_pi(F(21, 32)), _q(F(76, 45))]
RHO = {-1: _q(1), 0: sqrt_2pi(F(1, 4)), 1: _q(F(5, 24)), 2: sqrt_2pi(F(5, 256)), 3: _q(F(221, 24192))}

# E X, E X^2 and the rounded ratio E X^2 / (E X)^2
FIRST_TWO = {
    "Ex": (0.6266570687, F(5, 12), 1.06103),
    "Br": (0.3133285343, F(7, 60), 1.18836),
    "Bm": (0.5319230405, F(3, 8), 1.32536),
    "Me": (0.9399856030, F(59, 60), 1.11291),
    "Dm": (0.7978845608, F(17, 24), 1.11265),
    "BmPlus": (0.2659615203, F(17, 96), 2.50346),
    "BrPlus": (0.1566642671, F(1, 20), 2.03718),
}

# rounded negative moments E X^-s
NEGATIVE = [
    ("Ex", F(1, 3), 1.184), ("Br", F(1, 3), 1.528), ("Me", F(1, 3), 1.046), ("BrPlus", F(1, 3), 3.056),
    ("Bm", F(2, 3), 1.797), ("Dm", F(2, 3), 1.230), ("BmPlus", F(2, 3), None),
    ("Ex", F(1), 1.693), ("Br", F(1), 3.760), ("Me", F(1), 1.186), ("BrPlus", F(1), None),
    ("Bm", F(4, 3), 3.658), ("Dm", F(4, 3), 1.580), ("Bm", F(2), 8.300), ("Dm", F(2), 2.112),
]
