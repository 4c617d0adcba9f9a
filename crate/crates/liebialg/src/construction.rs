//! The subalgebra construction: test the scaling condition
//! `[X, [X, pi]] = lambda [X, pi]`, take the image of contraction with
//! `[X, pi]`, and certify coisotropy with the independent dual-bracket
//! oracle. A parallel route starts from a group element `g` and the bivector
//! `pi - Ad_g pi`.


use crate::bialgebra::{coisotropy_report, CoisotropyReport};
use crate::error::Error;
use crate::liealg::LieAlgebra;
use crate::linalg::{solve_proportionality, unit_vector, Matrix, Proportionality, Vector};
use crate::multivector::{contract, schouten, Multivector};
use crate::scalar::Scalar;
use crate::subspace::{Ambient, Subspace};

/// Outcome of the scaling-condition test for one candidate `X`.
#[derive(Clone, Debug)]
pub struct ConditionReport<S: Scalar> {
    pub x: Vector<S>,
    /// `[X, pi]`.
    pub bracket_x_pi: Multivector<S>,
    /// `Unique(lambda)` when `[X,[X,pi]] = lambda [X,pi]` with `[X,pi]`
    /// nonzero, `Any` when `[X,pi] = 0` (every scalar works), `None` when no
    /// scalar exists.
    pub lambda: Option<Proportionality<S>>,
    pub holds: bool,
}

/// Align two multivectors on the union of their support and return the two
/// coefficient vectors.
fn aligned_coefficients<S: Scalar>(a: &Multivector<S>, b: &Multivector<S>) -> (Vector<S>, Vector<S>) {
    let mut keys: Vec<Vec<usize>> = a.terms().map(|(k, _)| k.clone()).collect();
    keys.extend(b.terms().map(|(k, _)| k.clone()));
    keys.sort();
    keys.dedup();
    let av = keys.iter().map(|k| a.coefficient(k)).collect();
    let bv = keys.iter().map(|k| b.coefficient(k)).collect();
    (av, bv)
}

/// Test whether `[X, [X, pi]]` is a scalar multiple of `[X, pi]`.
pub fn check_condition<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
    x: &[S],
) -> Result<ConditionReport<S>, Error> {
    let x_mv = Multivector::from_vector(x);
    let bracket_x_pi = schouten(alg, &x_mv, pi)?;
    let double_bracket = schouten(alg, &x_mv, &bracket_x_pi)?;
    let (a, b) = aligned_coefficients(&double_bracket, &bracket_x_pi);
    let lambda = solve_proportionality(&a, &b)?;
    let holds = lambda.is_some();
    Ok(ConditionReport {
        x: x.to_vec(),
        bracket_x_pi,
        lambda,
        holds,
    })
}

/// Image of the contraction map of a bivector: `{ b# xi : xi in g* }`.
pub fn bivector_image<S: Scalar>(b: &Multivector<S>) -> Result<Subspace<S>, Error> {
    let dim = b.dim();
    let mut rows = Vec::with_capacity(dim);
    for j in 0..dim {
        rows.push(contract(b, &unit_vector(dim, j))?);
    }
    Ok(Subspace::from_spanning(Ambient::Algebra, dim, rows))
}

/// The candidate subspace `[X, pi]# g*`, canonicalized. Meaningful when the
/// scaling condition holds, but computable for any `X`.
pub fn sharp_image<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
    x: &[S],
) -> Result<Subspace<S>, Error> {
    let bracket = schouten(alg, &Multivector::from_vector(x), pi)?;
    bivector_image(&bracket)
}

/// Full outcome of the construction for one candidate `X`.
#[derive(Clone, Debug)]
pub struct ConstructionReport<S: Scalar> {
    pub condition: ConditionReport<S>,
    pub subspace: Subspace<S>,
    pub coisotropy: CoisotropyReport<S>,
}

impl<S: Scalar> ConstructionReport<S> {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn is_subalgebra(&self) -> bool {
        self.coisotropy.is_subalgebra()
    }

    pub fn is_coisotropic(&self) -> bool {
        self.coisotropy.is_coisotropic()
    }
}

/// Run the whole pipeline for `X`: test the scaling condition, build the
/// candidate subspace, then certify it with the independent coisotropy
/// oracle. When the condition holds the subspace is provably coisotropic and
/// of even dimension; a verdict to the contrary is an internal bug and is
/// returned as [`Error::OracleContradiction`].
///
/// The caller is responsible for `pi` being an r-matrix; when the condition
/// fails the report is still produced (the verdicts remain informative).
pub fn construct<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
    x: &[S],
) -> Result<ConstructionReport<S>, Error> {
    let condition = check_condition(alg, pi, x)?;
    let subspace = bivector_image(&condition.bracket_x_pi)?;
    let coisotropy = coisotropy_report(alg, pi, &subspace)?;
    if subspace.dim() % 2 != 0 {
        return Err(Error::OracleContradiction(format!(
            "contraction image has odd dimension {}",
            subspace.dim()
        )));
    }
    if condition.holds && !coisotropy.is_coisotropic() {
        return Err(Error::OracleContradiction(
            "scaling condition holds but the coisotropy oracle rejected the subspace".into(),
        ));
    }
    Ok(ConstructionReport {
        condition,
        subspace,
        coisotropy,
    })
}

/// The bivector `pi - Ad_g pi` attached to a group element of the
/// realization.
pub fn group_bivector<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
    g: &Matrix<S>,
) -> Result<Multivector<S>, Error> {
    let ad = alg.adjoint_matrix(g)?;
    Ok(pi.sub(&pi.map_linear(&ad)))
}

/// Outcome of the group-element route.
#[derive(Clone, Debug)]
pub struct GroupReport<S: Scalar> {
    /// `pi - Ad_g pi`.
    pub bivector: Multivector<S>,
    pub subspace: Subspace<S>,
    /// Whether `[eta, eta] = 0` for `eta = pi - Ad_g pi`; this forces the
    /// subspace to be a subalgebra (and hence coisotropic).
    pub flat: bool,
    pub coisotropy: CoisotropyReport<S>,
}

impl<S: Scalar> GroupReport<S> {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn is_subalgebra(&self) -> bool {
        self.coisotropy.is_subalgebra()
    }

    pub fn is_coisotropic(&self) -> bool {
        self.coisotropy.is_coisotropic()
    }
}

/// Image of `(pi - Ad_g pi)#` with the flatness, subalgebra and coisotropy
/// verdicts. The implications `flat => subalgebra => coisotropic` are
/// re-checked on every call; a violation signals an internal bug.
pub fn subspace_from_group<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
    g: &Matrix<S>,
) -> Result<GroupReport<S>, Error> {
    let bivector = group_bivector(alg, pi, g)?;
    let subspace = bivector_image(&bivector)?;
    let flat = schouten(alg, &bivector, &bivector)?.is_zero();
    let coisotropy = coisotropy_report(alg, pi, &subspace)?;
    if flat && !coisotropy.is_subalgebra() {
        return Err(Error::OracleContradiction(
            "flat group bivector produced a non-subalgebra".into(),
        ));
    }
    if coisotropy.is_subalgebra() && !coisotropy.is_coisotropic() {
        return Err(Error::OracleContradiction(
            "subalgebra from a group element failed the coisotropy oracle".into(),
        ));
    }
    Ok(GroupReport {
        bivector,
        subspace,
        flat,
        coisotropy,
    })
}

/// For a group element whose subspace is a subalgebra, check that inversion
/// stays inside the good set: `h(g^{-1}) = Ad_{g^{-1}} h(g)` and is again a
/// subalgebra.
pub fn inversion_check<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi: &Multivector<S>,
    g: &Matrix<S>,
) -> Result<bool, Error> {
    let report = subspace_from_group(alg, pi, g)?;
    if !report.is_subalgebra() {
        return Err(Error::invalid_input(
            "g",
            "the subspace attached to g is not a Lie subalgebra",
        ));
    }
    let g_inv = g.inverse()?;
    let inv_report = subspace_from_group(alg, pi, &g_inv)?;
    let mapped_rows: Vec<Vector<S>> = report
        .subspace
        .basis()
        .iter()
        .map(|row| alg.adjoint_group_action(&g_inv, row))
        .collect::<Result<_, _>>()?;
    let mapped = Subspace::from_spanning(Ambient::Algebra, alg.dim(), mapped_rows);
    Ok(inv_report.subspace == mapped && inv_report.is_subalgebra())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{sl2, su2};
    use crate::scalar::Rational;

    fn rat(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn vecq(coords: &[i64]) -> Vec<Rational> {
        coords.iter().map(|&n| rat(n)).collect()
    }

    fn matq(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&n| rat(n)).collect()).collect())
    }

    fn pi() -> Multivector<Rational> {
        Multivector::from_terms(3, 2, vec![(vec![1, 2], rat(2))]).unwrap()
    }

    fn span(rows: &[&[i64]]) -> Subspace<Rational> {
        Subspace::from_spanning(
            Ambient::Algebra,
            3,
            rows.iter().map(|r| vecq(r)).collect(),
        )
    }

    #[test]
    fn condition_examples() {
        let su = su2::<Rational>();
        // X = e1 on su(2): [X, pi] = 0, vacuous
        let rep = check_condition(&su, &pi(), &vecq(&[1, 0, 0])).unwrap();
        assert!(rep.holds);
        assert!(rep.bracket_x_pi.is_zero());
        assert_eq!(rep.lambda, Some(Proportionality::Any));

        let sl = sl2::<Rational>();
        // X = e2 + e3: lambda = 0
        let rep = check_condition(&sl, &pi(), &vecq(&[0, 1, 1])).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.lambda, Some(Proportionality::Unique(rat(0))));
        // X = e2: no proportionality
        let rep = check_condition(&sl, &pi(), &vecq(&[0, 1, 0])).unwrap();
        assert!(!rep.holds);
        assert_eq!(rep.lambda, None);
        // X = e1 + e2 + e3: lambda = 1
        let rep = check_condition(&sl, &pi(), &vecq(&[1, 1, 1])).unwrap();
        assert_eq!(rep.lambda, Some(Proportionality::Unique(rat(1))));
        // X = e1 + e2 - e3: lambda = -1
        let rep = check_condition(&sl, &pi(), &vecq(&[1, 1, -1])).unwrap();
        assert_eq!(rep.lambda, Some(Proportionality::Unique(rat(-1))));
    }

    #[test]
    fn sharp_image_examples() {
        let sl = sl2::<Rational>();
        // [X, pi] = 0 gives the zero subspace
        assert!(sharp_image(&sl, &pi(), &vecq(&[1, 0, 0])).unwrap().is_zero());
        assert_eq!(
            sharp_image(&sl, &pi(), &vecq(&[0, 1, 1])).unwrap(),
            span(&[&[1, 0, 0], &[0, 1, 1]])
        );
    }

    #[test]
    fn construct_examples() {
        let sl = sl2::<Rational>();
        let rep = construct(&sl, &pi(), &vecq(&[1, 1, 1])).unwrap();
        assert!(rep.condition.holds);
        assert_eq!(rep.subspace, span(&[&[1, 0, 0], &[0, 1, 1]]));
        assert!(rep.is_coisotropic());

        let su = su2::<Rational>();
        let rep = construct(&su, &pi(), &vecq(&[1, 0, 0])).unwrap();
        assert!(rep.condition.holds);
        assert!(rep.subspace.is_zero());
        assert!(rep.is_coisotropic());

        // condition fails: verdicts still reported
        let rep = construct(&sl, &pi(), &vecq(&[0, 1, 0])).unwrap();
        assert!(!rep.condition.holds);
        assert_eq!(rep.dim(), 2);
    }

    #[test]
    fn group_bivector_examples() {
        let sl = sl2::<Rational>();
        let id = Matrix::identity(2);
        assert!(group_bivector(&sl, &pi(), &id).unwrap().is_zero());

        // diagonal elements fix pi
        let diag = Matrix::from_rows(vec![
            vec![rat(2), rat(0)],
            vec![rat(0), Rational::from_fraction(1, 2)],
        ]);
        assert!(group_bivector(&sl, &pi(), &diag).unwrap().is_zero());

        // the product of the two unipotent classes
        let gh = matq(&[&[0, 1], &[-1, 1]]);
        let eta = group_bivector(&sl, &pi(), &gh).unwrap();
        let expected = Multivector::from_terms(
            3,
            2,
            vec![
                (vec![0, 1], rat(2)),
                (vec![1, 2], rat(4)),
                (vec![0, 2], rat(-2)),
            ],
        )
        .unwrap();
        assert_eq!(eta, expected);
    }

    #[test]
    fn subspace_from_group_examples() {
        let sl = sl2::<Rational>();
        // upper triangular, b != 0
        let g = matq(&[&[1, 1], &[0, 1]]);
        let rep = subspace_from_group(&sl, &pi(), &g).unwrap();
        assert!(rep.flat);
        assert!(rep.is_coisotropic());
        assert_eq!(rep.subspace, span(&[&[1, 0, 0], &[0, 1, 1]]));

        // lower triangular, c != 0
        let h = matq(&[&[1, 0], &[-1, 1]]);
        let rep = subspace_from_group(&sl, &pi(), &h).unwrap();
        assert!(rep.flat);
        assert_eq!(rep.subspace, span(&[&[1, 0, 0], &[0, 1, -1]]));

        // diagonal: trivial subspace
        let diag = Matrix::from_rows(vec![
            vec![rat(3), rat(0)],
            vec![rat(0), Rational::from_fraction(1, 3)],
        ]);
        let rep = subspace_from_group(&sl, &pi(), &diag).unwrap();
        assert!(rep.subspace.is_zero());

        // the product gh: not flat, not a subalgebra
        let gh = matq(&[&[0, 1], &[-1, 1]]);
        let rep = subspace_from_group(&sl, &pi(), &gh).unwrap();
        assert!(!rep.flat);
        assert!(!rep.is_subalgebra());
    }

    #[test]
    fn inversion_check_examples() {
        let sl = sl2::<Rational>();
        let id = Matrix::identity(2);
        assert!(inversion_check(&sl, &pi(), &id).unwrap());
        assert!(inversion_check(&sl, &pi(), &matq(&[&[1, 1], &[0, 1]])).unwrap());
        assert!(inversion_check(&sl, &pi(), &matq(&[&[1, 0], &[-1, 1]])).unwrap());
        // not a subalgebra: precondition violated
        assert!(inversion_check(&sl, &pi(), &matq(&[&[0, 1], &[-1, 1]])).is_err());
    }
}
