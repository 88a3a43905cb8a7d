//! Closed forms of the classes used as oracles, written out by hand.

use super::{a, c, dv, inv, y};
use qcc_core::hall::Mode;
use qcc_core::poly::LaurentPoly;
use qcc_core::quiver::{DimVector, KostantPartition};
use qcc_core::repalg::RootCatalog;

fn one() -> LaurentPoly {
    LaurentPoly::one()
}

pub fn partition(cat: &RootCatalog, parts: &[(&[u32], u32)]) -> KostantPartition {
    let mut m = vec![0; cat.n_roots()];
    for (r, k) in parts {
        m[cat.root_index(&dv(r)).unwrap()] = *k;
    }
    KostantPartition(m)
}

/// `C°_(2,2)` on `1 -> 2` with the last bracket term over `last`.
pub fn a2_k22(last: LaurentPoly) -> LaurentPoly {
    let (a11, a12) = (a(1, 1), a(1, 2));
    let py = one() + y();
    let ratios = &a11 * inv(2, 1) + &a11 * inv(2, 2) + &a12 * inv(2, 1) + &a12 * inv(2, 2);
    let bracket = one() - y() + y() * ratios + y() * (y() - one()) * &a11 * &a12 * last;
    &py * &py * &a11 * &a12 * inv(2, 1) * inv(2, 2) * bracket
}

/// Open-orbit classes of `1 -> 2` for `γ <= (2,2)` with both coordinates
/// nonzero.
pub fn a2_open_orbits() -> Vec<(DimVector, Mode, LaurentPoly)> {
    let (a11, a12, a21, a22) = (a(1, 1), a(1, 2), a(2, 1), a(2, 2));
    let py = one() + y();
    let h12 = one() + &a21 + &a22 - c(2) * &a11;
    let h21 = one() + c(2) * &a21 - &a11 - &a12;
    let h22 = one() + (&a21 + &a22 - &a11 - &a12) - (&a21 + &a22) * (&a11 + &a12) + c(2) * (&a21 * &a22 + &a11 * &a12);
    let k11 = &py * &a11 * inv(2, 1);
    let k12 = &py * &(&a11 * inv(2, 1) + &a11 * inv(2, 2)) + (y() * y() - one()) * &a11 * &a11 * inv(2, 1) * inv(2, 2);
    let k21 = &py * &(&a11 * inv(2, 1) + &a12 * inv(2, 1)) + (y() * y() - one()) * &a11 * &a12 * inv(2, 1) * inv(2, 1);
    vec![
        (dv(&[1, 1]), Mode::Cohomology, one()),
        (dv(&[1, 2]), Mode::Cohomology, h12),
        (dv(&[2, 1]), Mode::Cohomology, h21),
        (dv(&[2, 2]), Mode::Cohomology, h22),
        (dv(&[1, 1]), Mode::KTheory, k11),
        (dv(&[1, 2]), Mode::KTheory, k12),
        (dv(&[2, 1]), Mode::KTheory, k21),
        (dv(&[2, 2]), Mode::KTheory, a2_k22(inv(2, 1) * inv(2, 2))),
    ]
}

/// The five orbits of `Rep_(1,2,1)` for `1 -> 2 -> 3`, open orbit first.
pub fn a3_orbits(cat: &RootCatalog) -> Vec<KostantPartition> {
    vec![
        partition(cat, &[(&[1, 1, 1], 1), (&[0, 1, 0], 1)]),
        partition(cat, &[(&[1, 1, 0], 1), (&[0, 1, 1], 1)]),
        partition(cat, &[(&[1, 1, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)]),
        partition(cat, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 1, 1], 1)]),
        partition(cat, &[(&[1, 0, 0], 1), (&[0, 1, 0], 2), (&[0, 0, 1], 1)]),
    ]
}

/// CSM classes of the five `A_3` orbits, then `csm(O_1) + csm(O_2)`.
pub fn a3_csm() -> (Vec<LaurentPoly>, LaurentPoly) {
    let (a_, b1, b2, c_) = (a(1, 1), a(2, 1), a(2, 2), a(3, 1));
    let orbits = vec![
        one() + (&c_ - &a_) + ((&c_ + &a_) * (&b1 + &b2) - &b1 * &b1 - &b2 * &b2 - c(2) * &a_ * &c_),
        (&c_ - &a_) + ((&c_ + &a_) * (&b1 + &b2) - c(2) * &a_ * &c_ - c(2) * &b1 * &b2),
        (&c_ - &b1) * (&c_ - &b2) * (one() + &b1 + &b2 - c(2) * &a_),
        (&b1 - &a_) * (&b2 - &a_) * (one() + c(2) * &c_ - &b1 - &b2),
        (&b1 - &a_) * (&b2 - &a_) * (&c_ - &b1) * (&c_ - &b2),
    ];
    let first_two = (one() + &b1 + &b2 - c(2) * &a_) * (one() + c(2) * &c_ - &b1 - &b2);
    (orbits, first_two)
}

/// MC classes of the five `A_3` orbits, then `mC(O_1) + mC(O_2)`.
pub fn a3_mc() -> (Vec<LaurentPoly>, LaurentPoly) {
    let (a_, b1, b2) = (a(1, 1), a(2, 1), a(2, 2));
    let (ib1, ib2, ic) = (inv(2, 1), inv(2, 2), inv(3, 1));
    let py = one() + y();
    let club = &a_ * &ib1 + &a_ * &ib2 + &b1 * &ic + &b2 * &ic;
    let a_c = &a_ * &ic;
    let left = &a_ * &ib1 + &a_ * &ib2 - (one() - y()) * &a_ * &a_ * &ib1 * &ib2;
    let right = &b1 * &ic + &b2 * &ic - (one() - y()) * &b1 * &b2 * &ic * &ic;
    let orbits = vec![
        &py * &py * &a_c * (one() + y() * &club - y() - y() * &a_c + y() * y() * &a_c),
        &py * &py * &a_c * (one() - &club + y() - y() * &a_c + &a_c + &b1 * &ib2 + &b2 * &ib1),
        (one() - &b1 * &ic) * (one() - &b2 * &ic) * &py * &left,
        (one() - &a_ * &ib1) * (one() - &a_ * &ib2) * &py * &right,
        (one() - &a_ * &ib1) * (one() - &a_ * &ib2) * (one() - &b1 * &ic) * (one() - &b2 * &ic),
    ];
    let first_two = &py * &py * &left * &right;
    (orbits, first_two)
}

/// Total classes of `Rep_(1,2,1)` for `1 -> 2 -> 3`.
pub fn a3_totals() -> (LaurentPoly, LaurentPoly) {
    let (a_, b1, b2, c_) = (a(1, 1), a(2, 1), a(2, 2), a(3, 1));
    let (ib1, ib2, ic) = (inv(2, 1), inv(2, 2), inv(3, 1));
    let h = (one() + &b1 - &a_) * (one() + &b2 - &a_) * (one() + &c_ - &b1) * (one() + &c_ - &b2);
    let k =
        (one() + y() * &a_ * &ib1) * (one() + y() * &a_ * &ib2) * (one() + y() * &b1 * &ic) * (one() + y() * &b2 * &ic);
    (h, k)
}

/// `c°` and `C°` of `(1,1,2,1)` on the `D_4` quiver with all arrows into 3.
pub fn d4_classes() -> (LaurentPoly, LaurentPoly) {
    let (a_, b_, c_, d1, d2) = (a(1, 1), a(2, 1), a(4, 1), a(3, 1), a(3, 2));
    let h = (one() + &d1 - &d2) * (one() + &d2 - &d1);
    let py = one() + y();
    let pre = py.pow(4) * &a_ * &b_ * &c_ * inv(3, 1).pow(3) * inv(3, 2).pow(3);
    let body = (one() - y()) * (&a_ + &b_ + &c_) * &d1 * &d2
        + (&d1 + &d2) * (y() * (&a_ * &b_ + &a_ * &c_ + &b_ * &c_) - &d1 * &d2)
        - y() * (one() - y()) * &a_ * &b_ * &c_;
    (h, pre * body)
}

fn swap_pairs(i: u16, slots: u16) -> LaurentPoly {
    let mut out = one();
    for u in 1..=slots {
        for v in 1..=slots {
            if u != v {
                out = out * (one() + a(i, u) - a(i, v));
            }
        }
    }
    out
}

/// `c°_(1,2,3,2,1,2)` on `E_6` as printed: factors at vertices 2, 3, 4 only.
pub fn e6_display_as_printed() -> LaurentPoly {
    swap_pairs(2, 2) * swap_pairs(4, 2) * swap_pairs(3, 3)
}

/// The printed `E_6` class with the two factors of vertex 6 restored.
pub fn e6_display() -> LaurentPoly {
    e6_display_as_printed() * swap_pairs(6, 2)
}
