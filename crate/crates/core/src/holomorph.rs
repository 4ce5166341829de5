//! The holomorph `hol(A) = A ⊕ Der(A)` and its decomposition.

use crate::algebra::LeibnizAlgebra;
use crate::derivation::{derivation_basis, DerivationBasis};
use crate::error::{LeibError, Result};
use crate::matrix::{Matrix, Vector};
use crate::subspace::Subspace;

/// `hol(A)` on the basis `(e_1..e_n, D_1..D_d)`, where `D_a` is the `a`-th derivation
/// of the basis used to build it.
#[derive(Clone, Debug)]
pub struct Holomorph {
    pub algebra: LeibnizAlgebra,
    pub base: LeibnizAlgebra,
    pub der: DerivationBasis,
    /// `(n + d) × n` inclusion of `A`.
    pub embed_a: Matrix,
}

impl Holomorph {
    pub fn n(&self) -> usize {
        self.base.dim()
    }

    /// Index of `D_a` in hol coordinates.
    pub fn der_index(&self, a: usize) -> usize {
        self.n() + a
    }

    /// Hol coordinates of `x ∈ A`.
    pub fn embed_vector(&self, x: &[crate::scalar::Scalar]) -> Vector {
        let mut out = self.algebra.zero_vector();
        out[..x.len()].clone_from_slice(x);
        out
    }

    pub fn embed_subspace(&self, s: &Subspace) -> Result<Subspace> {
        s.image(&self.embed_a)
    }

    /// Hol coordinates of the derivation with the given coordinates.
    pub fn embed_derivation(&self, coords: &[crate::scalar::Scalar]) -> Vector {
        let mut out = self.algebra.zero_vector();
        out[self.n()..].clone_from_slice(coords);
        out
    }

    /// Embedded copy of `A`.
    pub fn a_space(&self) -> Subspace {
        Subspace::coordinate(self.algebra.field(), self.algebra.dim(), &(0..self.n()).collect::<Vec<_>>())
    }

    /// `x − L_x` in hol coordinates.
    pub fn centralizer_element(&self, x: &[crate::scalar::Scalar]) -> Result<Vector> {
        let lx = self.base.left_mult_matrix(x)?;
        let coords = self
            .der
            .coordinates(&lx)?
            .ok_or_else(|| LeibError::CoordinateSolveFailure("left multiplication is not a derivation".into()))?;
        let mut out = self.embed_vector(x);
        for (a, c) in coords.iter().enumerate() {
            out[self.n() + a] = -c;
        }
        Ok(out)
    }
}

/// Name for the `a`-th derivation that does not collide with the basis of `A`.
fn der_names(a: &LeibnizAlgebra, d: usize) -> Vec<String> {
    let mut prefix = String::from("D");
    while (0..d).any(|i| a.index_of(&format!("{prefix}{}", i + 1)).is_some()) {
        prefix.insert(0, '_');
    }
    (0..d).map(|i| format!("{prefix}{}", i + 1)).collect()
}

/// `hol(A)` over the canonical derivation basis.
pub fn build_holomorph(a: &LeibnizAlgebra) -> Result<Holomorph> {
    build_holomorph_with(a, derivation_basis(a))
}

/// `hol(A)` with `[x+δ, y+ε] = [x,y] + δ(y) + L_{−ε(x)} + [δ,ε]` over the given basis of `Der(A)`.
pub fn build_holomorph_with(a: &LeibnizAlgebra, der: DerivationBasis) -> Result<Holomorph> {
    let n = a.dim();
    let d = der.dim();
    let m = n + d;
    let field = a.field();
    let solve = |mat: &Matrix, what: &str| -> Result<Vector> {
        der.coordinates(mat)?
            .ok_or_else(|| LeibError::CoordinateSolveFailure(format!("{what} lies outside the derivation algebra")))
    };
    let mut tensor = vec![field.zero(); m * m * m];
    let mut put = |i: usize, j: usize, offset: usize, v: &[crate::scalar::Scalar]| {
        let base = (i * m + j) * m + offset;
        tensor[base..base + v.len()].clone_from_slice(v);
    };
    let mats = der.matrices();
    let images: Vec<Vec<Vector>> = mats.iter().map(Matrix::columns).collect();
    for i in 0..n {
        for j in 0..n {
            put(i, j, 0, a.product_basis(i, j));
        }
        for (b, img) in images.iter().enumerate() {
            let neg: Vector = img[i].iter().map(|s| -s).collect();
            let coords = solve(&a.left_mult_matrix(&neg)?, "an inner derivation")?;
            put(i, n + b, n, &coords);
        }
    }
    for (da, img) in images.iter().enumerate() {
        for (j, col) in img.iter().enumerate() {
            put(n + da, j, 0, col);
        }
        for b in 0..d {
            let coords = solve(&mats[da].commutator(&mats[b])?, "a commutator")?;
            put(n + da, n + b, n, &coords);
        }
    }
    let mut names = a.names().to_vec();
    names.extend(der_names(a, d));
    let algebra = LeibnizAlgebra::new(field, names, tensor)?;
    let mut embed_a = Matrix::zeros(field, m, n);
    for i in 0..n {
        embed_a.set(i, i, field.one());
    }
    Ok(Holomorph {
        algebra,
        base: a.clone(),
        der,
        embed_a,
    })
}

/// `{h ∈ hol(A) : [h, A] = 0}`.
pub fn left_centralizer_of_a(h: &Holomorph) -> Subspace {
    let n = h.n();
    let m = h.algebra.dim();
    let field = h.algebra.field();
    if n == 0 {
        return Subspace::full(field, m);
    }
    let mut stacked = h.algebra.right_mult_basis(0);
    for j in 1..n {
        stacked = stacked.vstack(&h.algebra.right_mult_basis(j)).expect("same width");
    }
    stacked.nullspace()
}

/// `{δ ∈ Der(A) : im δ ⊆ Leib(A)}` in hol coordinates.
pub fn inner_image_ideal(h: &Holomorph) -> Result<Subspace> {
    let field = h.algebra.field();
    let d = h.der.dim();
    let n = h.n();
    let ann = h.base.leib_ideal().annihilator();
    let mats = h.der.matrices();
    let coords = if d == 0 {
        Subspace::zero(field, 0)
    } else if ann.rows() == 0 || n == 0 {
        Subspace::full(field, d)
    } else {
        // Row (α, j): α · δ(e_j) = 0.
        let mut sys = Matrix::zeros(field, ann.rows() * n, d);
        for (b, mat) in mats.iter().enumerate() {
            let prod = ann.mul(mat)?;
            for r in 0..ann.rows() {
                for j in 0..n {
                    sys.set(r * n + j, b, prod.get(r, j).clone());
                }
            }
        }
        sys.nullspace()
    };
    Subspace::span(field, h.algebra.dim(), coords.vectors().iter().map(|c| h.embed_derivation(c)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolDecomposition {
    pub z: Subspace,
    pub i: Subspace,
    /// `A + Z + I = hol(A)`.
    pub sums_to_hol: bool,
    pub z_meet_i_trivial: bool,
    pub a_meet_zi: Subspace,
    /// `A ∩ (Z ⊕ I) = Leib(A)`.
    pub a_meet_zi_equals_leib: bool,
    /// `A ∩ Z = Z^l(A)`.
    pub a_meet_z_equals_left_center: bool,
    /// `dim Z = n` and `x − L_x ∈ Z` for every basis vector.
    pub centralizer_is_graph: bool,
}

impl HolDecomposition {
    /// All three decomposition statements hold.
    pub fn holds(&self) -> bool {
        self.sums_to_hol && self.z_meet_i_trivial && self.a_meet_zi_equals_leib
    }
}

pub fn decomposition_check(h: &Holomorph) -> Result<HolDecomposition> {
    let z = left_centralizer_of_a(h);
    let i = inner_image_ideal(h)?;
    let a_sp = h.a_space();
    let zi = z.sum(&i)?;
    let sums_to_hol = a_sp.sum(&zi)?.is_full();
    let z_meet_i_trivial = z.intersect(&i)?.is_zero();
    let a_meet_zi = a_sp.intersect(&zi)?;
    let leib = h.embed_subspace(&h.base.leib_ideal())?;
    let lz = h.embed_subspace(&h.base.left_center())?;
    let a_meet_z_equals_left_center = a_sp.intersect(&z)? == lz;
    let mut centralizer_is_graph = z.dim() == h.n();
    for k in 0..h.n() {
        centralizer_is_graph &= z.contains(&h.centralizer_element(&h.base.basis_vector(k))?)?;
    }
    Ok(HolDecomposition {
        a_meet_zi_equals_leib: a_meet_zi == leib,
        z,
        i,
        sums_to_hol,
        z_meet_i_trivial,
        a_meet_zi,
        a_meet_z_equals_left_center,
        centralizer_is_graph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, CyclicSpec};
    use crate::completeness::is_complete;
    use crate::scalar::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn one_dimensional() {
        let a = catalog::abelian(1, q());
        let h = build_holomorph(&a).unwrap();
        assert_eq!(h.algebra.dim(), 2);
        assert!(!h.algebra.is_lie());
        // [D, x] = x and [x, D] = 0.
        assert_eq!(h.algebra.product_basis(1, 0), &[q().one(), q().zero()][..]);
        assert!(h.algebra.product_basis(0, 1).iter().all(|s| s.is_zero()));
        assert_eq!(left_centralizer_of_a(&h), Subspace::coordinate(q(), 2, &[0]));
    }

    #[test]
    fn restriction_reproduces_base() {
        for a in [catalog::sl2(q()), catalog::example_3_8()] {
            let h = build_holomorph(&a).unwrap();
            let r = h.algebra.restrict(&h.a_space()).unwrap();
            assert_eq!(r.tensor(), a.tensor());
        }
        assert_eq!(build_holomorph(&catalog::sl2(q())).unwrap().algebra.dim(), 6);
    }

    #[test]
    fn example_decomposition_in_listed_basis() {
        let a = catalog::example_3_8();
        let der = DerivationBasis::from_matrices(&a, catalog::example_3_8_derivations()).unwrap();
        let h = build_holomorph_with(&a, der).unwrap();
        assert_eq!(h.algebra.dim(), 8);
        let v = |xs: &[i64]| xs.iter().map(|&x| q().from_i64(x)).collect::<Vector>();
        // Order: w, x, y, z, δ1, δ2, δ3, δ4.
        let z_expected = Subspace::span(
            q(),
            8,
            vec![
                v(&[0, 0, 0, 1, 0, 0, 0, 0]),
                v(&[1, 0, 0, 0, 0, 0, -1, 0]),
                v(&[0, 1, 0, 0, 1, -1, 0, -1]),
                v(&[0, 0, 1, 0, 0, 1, 0, 0]),
            ],
        )
        .unwrap();
        let dec = decomposition_check(&h).unwrap();
        assert_eq!(dec.z, z_expected);
        assert_eq!(dec.i, Subspace::coordinate(q(), 8, &[5, 7]));
        assert!(dec.sums_to_hol && dec.z_meet_i_trivial);
        assert!(dec.a_meet_z_equals_left_center && dec.centralizer_is_graph);
        // y + δ2 ∈ Z and δ2 ∈ I, so y lies in A ∩ (Z ⊕ I) as well as z.
        assert_eq!(dec.a_meet_zi, Subspace::coordinate(q(), 8, &[2, 3]));
        assert!(!dec.a_meet_zi_equals_leib);
        assert_eq!(dec.a_meet_zi, h.embed_subspace(&central_preimage(&a)).unwrap());
        assert!(!is_complete(&a).complete);
    }

    /// Preimage in `A` of the center of `A/Leib(A)`.
    fn central_preimage(a: &LeibnizAlgebra) -> Subspace {
        let quot = a.lie_quotient();
        quot.preimage(&quot.algebra.left_center()).unwrap()
    }

    #[test]
    fn meet_with_a_is_central_preimage() {
        for a in [catalog::heisenberg(q()), catalog::hemi_sl2_adjoint(), catalog::cyclic_nilpotent(4, q())] {
            let dec = decomposition_check(&build_holomorph(&a).unwrap()).unwrap();
            let h = build_holomorph(&a).unwrap();
            assert_eq!(dec.a_meet_zi, h.embed_subspace(&central_preimage(&a)).unwrap());
        }
    }

    #[test]
    fn complete_and_outer_cases() {
        let hemi = catalog::hemi_sl2_natural();
        let dec = decomposition_check(&build_holomorph(&hemi).unwrap()).unwrap();
        assert!(dec.holds());

        let c = catalog::cyclic_nilpotent(3, q());
        let h = build_holomorph(&c).unwrap();
        let dec = decomposition_check(&h).unwrap();
        assert!(!dec.sums_to_hol);
        let spec = CyclicSpec::nilpotent(3, q()).unwrap();
        let listed = catalog::expected_cyclic_der(&spec);
        let h = build_holomorph_with(&c, DerivationBasis::from_matrices(&c, listed).unwrap()).unwrap();
        assert_eq!(inner_image_ideal(&h).unwrap(), Subspace::coordinate(q(), 6, &[4, 5]));
    }

    #[test]
    fn rejects_non_basis() {
        let a = catalog::example_3_8();
        let mut mats = catalog::example_3_8_derivations();
        mats.pop();
        assert!(DerivationBasis::from_matrices(&a, mats).is_err());
    }
}
