use serde::Serialize;

use super::quotient::{minimal_quotient, Minimality};
use super::FamilyError;
use crate::bqa::{find_minimal_nonzero_cycle, is_symmetric, BoundAlgebra, Cycle};
use crate::exactla::{Field, Matrix};
use crate::rep::{brick_criterion_socle, is_brick, is_indecomposable, is_isomorphic, socle, Indecomposability, Representation};
use crate::tensoralg::{tensor_product_algebra, TensorIndex};

/// Everything needed to build members of the one-parameter brick family
/// on `first ⊗ second`, where the first factor has the shorter cycle.
#[derive(Clone, Debug)]
pub struct FamilySpec<F: Field> {
    pub first: BoundAlgebra<F>,
    pub second: BoundAlgebra<F>,
    pub tensor: BoundAlgebra<F>,
    pub index: TensorIndex,
    /// Minimal nonzero cycle of the first factor (length `short`).
    pub cycle_first: Cycle,
    /// Minimal nonzero cycle of the second factor (length `long >= short`).
    pub cycle_second: Cycle,
    /// True when the inputs were exchanged to put the shorter cycle first.
    pub swapped: bool,
    /// Quotient of the second factor's projective at its cycle base in
    /// which the simple at position `long - short + 2` occurs once. Its
    /// first basis vector at the base is the image of the generator.
    pub quotient: Representation<F>,
    pub quotient_minimality: Minimality,
}

impl<F: Field> FamilySpec<F> {
    pub fn new(a: &BoundAlgebra<F>, b: &BoundAlgebra<F>) -> Result<Self, FamilyError> {
        let ca = find_minimal_nonzero_cycle(a).ok_or(FamilyError::NoCycle("first"))?;
        let cb = find_minimal_nonzero_cycle(b).ok_or(FamilyError::NoCycle("second"))?;
        let swapped = ca.len() > cb.len();
        let (first, second, cycle_first, cycle_second) =
            if swapped { (b.clone(), a.clone(), cb, ca) } else { (a.clone(), b.clone(), ca, cb) };
        let tensor = tensor_product_algebra(&first, &second)?;
        let index = TensorIndex::new(first.quiver(), second.quiver());
        let target = cycle_second.len() - cycle_first.len() + 2;
        let q = minimal_quotient(&second, &cycle_second, target)?;
        Ok(FamilySpec {
            first,
            second,
            tensor,
            index,
            cycle_first,
            cycle_second,
            swapped,
            quotient: q.rep,
            quotient_minimality: q.minimality,
        })
    }

    pub fn short(&self) -> usize {
        self.cycle_first.len()
    }

    pub fn long(&self) -> usize {
        self.cycle_second.len()
    }

    /// Tensor vertex at 1-based cycle positions, second one read mod `long`.
    pub fn vertex(&self, i: usize, j: usize) -> usize {
        self.index.vertex(self.cycle_first.vertex_at(i), self.cycle_second.vertex_at(j))
    }

    /// Vertices carrying the socle: positions `(short - i, long - short + 3 + i)`
    /// for `-1 <= i <= short - 2`, both read cyclically.
    pub fn expected_socle(&self) -> Vec<usize> {
        let (n, m) = (self.short() as i64, self.long() as i64);
        let mut out: Vec<usize> = (-1..=n - 2)
            .map(|i| {
                let a = (n - i - 1).rem_euclid(n) as usize + 1;
                let b = (m - n + 3 + i - 1).rem_euclid(m) as usize + 1;
                self.vertex(a, b)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// The family member for a nonzero parameter.
    ///
    /// Row 1 carries `S_1 ⊗ quotient`. For `0 <= i <= short - 2` the vertices
    /// at positions `(short - i, long - short + 2 + i)` and
    /// `(short - i, long - short + 3 + i)` get a line each, joined to their
    /// neighbours by identities; the horizontal arrow out of `(1, 1)` acts
    /// as the row `[lambda, 0, ..., 0]`.
    pub fn member(&self, lambda: &F::Elem) -> Result<Representation<F>, FamilyError> {
        let f = self.tensor.field();
        if f.is_zero(lambda) {
            return Err(FamilyError::BadParameters("the parameter must be nonzero".into()));
        }
        let q = self.tensor.quiver();
        let ix = self.index;
        let (n, m) = (self.short(), self.long());
        let row = self.cycle_first.vertex_at(1);

        let mut dims = vec![0; q.num_vertices()];
        for j in 0..self.second.num_vertices() {
            dims[ix.vertex(row, j)] = self.quotient.dim_at(j);
        }
        for i in 0..=n - 2 {
            dims[self.vertex(n - i, m - n + 2 + i)] = 1;
            dims[self.vertex(n - i, m - n + 3 + i)] = 1;
        }
        let mut maps: Vec<Matrix<F>> = q.arrows().iter().map(|a| Matrix::zeros(f, dims[a.target], dims[a.source])).collect();
        for beta in 0..self.second.quiver().num_arrows() {
            maps[ix.vertical(row, beta)] = self.quotient.map(beta).clone();
        }
        let one = Matrix::identity(f, 1);
        for i in 0..=n - 2 {
            let col = self.cycle_second.vertex_at(m - n + 2 + i);
            let h = ix.horizontal(self.cycle_first.arrow_at(n - i), col);
            let v = ix.vertical(self.cycle_first.vertex_at(n - i), self.cycle_second.arrow_at(m - n + 2 + i));
            for a in [h, v] {
                if maps[a].shape() != (1, 1) {
                    return Err(FamilyError::RelationViolation(format!("arrow {} does not join two lines", q.arrow(a).id)));
                }
                maps[a] = one.clone();
            }
        }
        let start = ix.horizontal(self.cycle_first.arrow_at(1), self.cycle_second.vertex_at(1));
        let mut row_map = Matrix::zeros(f, dims[q.arrow(start).target], dims[q.arrow(start).source]);
        row_map.set(0, 0, lambda.clone());
        maps[start] = row_map;

        let rep = Representation::new(&self.tensor, dims, maps)?;
        if let Some(r) = rep.first_violated_relation(&self.tensor) {
            let rel = &self.tensor.relations()[r];
            return Err(FamilyError::RelationViolation(rel.display(f, q)));
        }
        Ok(rep)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    TauTiltingInfinite,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberRecord {
    pub parameter: String,
    pub dims: Vec<usize>,
    pub relations_hold: bool,
    pub indecomposable: bool,
    pub socle_criterion: bool,
    pub end_dim_one: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    /// Two parallel non-loop arrows in a factor quiver.
    MultipleArrow { factor: String, arrows: [String; 2] },
    Bricks {
        members: Vec<MemberRecord>,
        pairwise_nonisomorphic: bool,
        cycle_lengths: [usize; 2],
        swapped: bool,
        quotient_dims: Vec<usize>,
        quotient_minimality: Minimality,
    },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub algebra: String,
    pub field: String,
    pub verdict: Verdict,
    pub evidence: Evidence,
    pub warnings: Vec<String>,
    pub log: Vec<String>,
}

fn check_parameters<F: Field>(f: F, lambdas: &[F::Elem]) -> Result<(), FamilyError> {
    if lambdas.len() < 2 {
        return Err(FamilyError::BadParameters("at least two parameters are needed".into()));
    }
    if lambdas.iter().any(|l| f.is_zero(l)) {
        return Err(FamilyError::BadParameters("parameters must be nonzero".into()));
    }
    for (i, a) in lambdas.iter().enumerate() {
        if lambdas[i + 1..].contains(a) {
            return Err(FamilyError::BadParameters(format!("parameter {a} is repeated")));
        }
    }
    Ok(())
}

/// Builds and checks the members for each parameter: relations, the socle
/// criterion, indecomposability and one-dimensional endomorphisms, then
/// pairwise non-isomorphism.
pub fn verify_family<F: Field>(spec: &FamilySpec<F>, lambdas: &[F::Elem]) -> Result<Certificate, FamilyError> {
    let f = spec.tensor.field();
    check_parameters(f, lambdas)?;
    let alg = &spec.tensor;
    let mut log = Vec::new();
    let mut failed: Option<String> = None;
    let mut members = Vec::new();
    let mut reps = Vec::new();
    for l in lambdas {
        let rep = spec.member(l)?;
        let relations_hold = rep.check_relations(alg);
        let decomp = is_indecomposable(alg, &rep)?;
        let indecomposable = decomp == Indecomposability::Indecomposable;
        let socle_criterion = indecomposable && brick_criterion_socle(alg, &rep)?;
        let end_dim_one = is_brick(alg, &rep)?;
        let soc_ok = {
            let soc = socle(alg, &rep).rep;
            let mut got: Vec<usize> = soc.support();
            got.sort_unstable();
            got == spec.expected_socle() && soc.support().iter().all(|&v| soc.dim_at(v) == 1)
        };
        log.push(format!(
            "parameter {l}: relations {relations_hold}, indecomposable {indecomposable}, socle criterion {socle_criterion}, End dim one {end_dim_one}, socle as predicted {soc_ok}"
        ));
        for (ok, name) in [
            (relations_hold, "relations"),
            (indecomposable, "indecomposability"),
            (socle_criterion, "socle criterion"),
            (end_dim_one, "brick"),
            (soc_ok, "socle formula"),
        ] {
            if !ok && failed.is_none() {
                failed = Some(format!("{name} failed for parameter {l}"));
            }
        }
        members.push(MemberRecord {
            parameter: l.to_string(),
            dims: rep.dims().to_vec(),
            relations_hold,
            indecomposable,
            socle_criterion,
            end_dim_one,
        });
        reps.push(rep);
    }
    let mut pairwise = true;
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let iso = is_isomorphic(alg, &reps[i], &reps[j])?;
            log.push(format!("parameters {} and {}: isomorphic {iso}", lambdas[i], lambdas[j]));
            if iso {
                pairwise = false;
                if failed.is_none() {
                    failed = Some(format!("members for {} and {} are isomorphic", lambdas[i], lambdas[j]));
                }
            }
        }
    }
    let mut warnings = Vec::new();
    if let Some(q) = f.order() {
        warnings.push(format!(
            "over GF({q}) only {} nonzero parameters exist; the family is infinite over any infinite extension",
            q - 1
        ));
    }
    if spec.quotient_minimality == Minimality::Uncertified {
        warnings.push("greedy, minimality uncertified".into());
    }
    let verdict = match &failed {
        None => Verdict::TauTiltingInfinite,
        Some(reason) => {
            log.push(format!("inconclusive: {reason}"));
            Verdict::Inconclusive
        }
    };
    Ok(Certificate {
        algebra: "A ⊗ B".into(),
        field: f.spec().to_string(),
        verdict,
        evidence: Evidence::Bricks {
            members,
            pairwise_nonisomorphic: pairwise,
            cycle_lengths: [spec.short(), spec.long()],
            swapped: spec.swapped,
            quotient_dims: spec.quotient.dims().to_vec(),
            quotient_minimality: spec.quotient_minimality.clone(),
        },
        warnings,
        log,
    })
}

/// Full pipeline for `a ⊗ b`: hypothesis checks, the parallel-arrow
/// shortcut, then the brick family.
pub fn certify_tensor<F: Field>(a: &BoundAlgebra<F>, b: &BoundAlgebra<F>, lambdas: &[F::Elem], seed: u64) -> Result<Certificate, FamilyError> {
    let f = a.field();
    if f != b.field() {
        return Err(FamilyError::Algebra(crate::bqa::BqaError::FieldMismatch(f.spec(), b.field().spec())));
    }
    check_parameters(f, lambdas)?;
    let mut warnings = Vec::new();
    let mut log = Vec::new();
    for (name, alg) in [("A", a), ("B", b)] {
        if !alg.quiver().is_connected() {
            warnings.push(format!("hypothesis violated: {name} is not connected"));
        }
        match is_symmetric(alg, seed) {
            Ok(true) => {}
            Ok(false) => warnings.push(format!("hypothesis violated: {name} is not symmetric")),
            Err(e) => warnings.push(format!("hypothesis unchecked for {name}: {e}")),
        }
        if alg.num_vertices() < 2 {
            warnings.push(format!("hypothesis violated: local factor {name}"));
        }
    }
    let base = |verdict, evidence, warnings, log| Certificate {
        algebra: "A ⊗ B".into(),
        field: f.spec().to_string(),
        verdict,
        evidence,
        warnings,
        log,
    };
    for (name, alg) in [("A", a), ("B", b)] {
        if let Some((x, y)) = alg.quiver().multiple_arrow() {
            let q = alg.quiver();
            log.push(format!("{name} has parallel arrows {} and {}", q.arrow(x).id, q.arrow(y).id));
            let evidence = Evidence::MultipleArrow { factor: name.into(), arrows: [q.arrow(x).id.clone(), q.arrow(y).id.clone()] };
            return Ok(base(Verdict::TauTiltingInfinite, evidence, warnings, log));
        }
    }
    let spec = match FamilySpec::new(a, b) {
        Ok(s) => s,
        Err(e @ (FamilyError::NoCycle(_) | FamilyError::QuotientNotFound(_))) => {
            log.push(format!("inconclusive: {e}"));
            return Ok(base(Verdict::Inconclusive, Evidence::None, warnings, log));
        }
        Err(e) => return Err(e),
    };
    let mut cert = verify_family(&spec, lambdas)?;
    warnings.append(&mut cert.warnings);
    log.append(&mut cert.log);
    cert.warnings = warnings;
    cert.log = log;
    Ok(cert)
}

/// Default parameters: 1, 2, 3 over the rationals; the first
/// `min(3, p - 1)` nonzero residues over GF(p).
pub fn default_parameters<F: Field>(f: F) -> Vec<F::Elem> {
    let count = f.order().map_or(3, |q| (q - 1).min(3));
    (1..=count).map(|i| f.nth(i)).collect()
}
