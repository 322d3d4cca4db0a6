//! Shared oracles for the integration suites. These stay independent of the
//! solver implementations they are used to check.

use hilbtan::groebner::{buchberger, Ideal};
use hilbtan::linalg::{rat, RowEchelon};
use hilbtan::poly::{Polynomial, RingContext};
use hilbtan::quotient::{multiplication_matrix, standard_monomials};

/// Tangent dimension through the Koszul syzygies `f_i e_j - f_j e_i`.
/// Valid whenever the generators form a regular sequence, where the Koszul
/// relations generate the whole syzygy module.
pub fn hom_dim_koszul(ideal: &Ideal) -> usize {
    let gb = buchberger(ideal);
    let qb = standard_monomials(&gb).expect("finite colength");
    let n = qb.colength();
    let gens = ideal.generators();
    let k = gens.len();
    let mats: Vec<_> = gens.iter().map(|g| multiplication_matrix(&qb, g)).collect();
    let zero = rat(0);
    let mut ech = RowEchelon::new(k * n);
    for i in 0..k {
        for j in (i + 1)..k {
            // f_i phi(f_j) - f_j phi(f_i) = 0 in S/I
            for r in 0..n {
                let mut row = vec![zero.clone(); k * n];
                let mut nonzero = false;
                for c in 0..n {
                    let a = mats[i].at(r, c);
                    if a != &zero {
                        row[j * n + c] += a;
                        nonzero = true;
                    }
                    let b = mats[j].at(r, c);
                    if b != &zero {
                        row[i * n + c] -= b;
                        nonzero = true;
                    }
                }
                if nonzero {
                    ech.insert(row);
                }
            }
        }
    }
    k * n - ech.rank()
}

/// The maximal ideal of the rational point `(a, b, c)`.
pub fn point_ideal(ring: &RingContext, point: [i64; 3]) -> Ideal {
    let gens = point
        .iter()
        .enumerate()
        .map(|(v, &coord)| {
            let var = Polynomial::variable(3, v);
            var.sub(&Polynomial::constant(rat(coord), 3), ring.order())
        })
        .collect();
    Ideal::new(ring.clone(), gens)
}

/// The ideal of a set of distinct rational points: the product of their
/// maximal ideals (which equals the intersection, the ideals being pairwise
/// comaximal).
pub fn points_ideal(ring: &RingContext, points: &[[i64; 3]]) -> Ideal {
    let mut acc = point_ideal(ring, points[0]);
    for p in &points[1..] {
        acc = acc.product(&point_ideal(ring, *p)).expect("same ring");
    }
    acc
}
