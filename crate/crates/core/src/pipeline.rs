//! End-to-end checks relating extensions, inner representations,
//! conjugation quandles and cocycle invariants.

use serde::Serialize;

use crate::cocycle::Cocycle2;
use crate::constructions::abelian_extension;
use crate::error::{Error, Result};
use crate::groups::{
    inn_preimage, FiniteEnvelope, Verdict, ConjugationReport, DEFAULT_MAX_COSETS,
};
use crate::knots::{end_monochromatic, state_sum, BraidKnot, GroupRingElt, Tangle};
use crate::perm::{Permutation, DEFAULT_GROUP_CAP};
use crate::quandle::{Quandle, QuandleMap};

/// `Q_0 -> Q_1 = inn(Q_0) -> ...`, stopping at the first faithful quandle.
#[derive(Debug, Clone)]
pub struct InnSequence {
    pub quandles: Vec<Quandle>,
    pub maps: Vec<QuandleMap>,
}

impl InnSequence {
    pub fn orders(&self) -> Vec<usize> {
        self.quandles.iter().map(Quandle::order).collect()
    }

    /// Number of inn steps taken.
    pub fn steps(&self) -> usize {
        self.maps.len()
    }

    pub fn terminal(&self) -> &Quandle {
        self.quandles.last().expect("sequence is nonempty")
    }

    pub fn is_terminal_faithful(&self) -> bool {
        self.terminal().is_faithful()
    }

    /// The composite map from the first quandle onto the terminal one.
    pub fn composite(&self) -> QuandleMap {
        let mut map = QuandleMap::identity(&self.quandles[0]);
        for next in &self.maps {
            map = map.then(next).expect("consecutive maps compose");
        }
        map
    }
}

pub fn inn_sequence(q: &Quandle) -> InnSequence {
    let mut quandles = vec![q.clone()];
    let mut maps = Vec::new();
    while !quandles.last().expect("nonempty").is_faithful() {
        let (image, map) = quandles.last().expect("nonempty").inn_image();
        quandles.push(image);
        maps.push(map);
    }
    InnSequence { quandles, maps }
}

/// A cocycle recovered from an index-2 covering, with the isomorphism
/// `E(X, Z_2, phi) -> Y` sending `(x, a)` to the level-`a` point over `x`.
#[derive(Debug, Clone)]
pub struct RecoveredExtension {
    pub cocycle: Cocycle2,
    pub isomorphism: QuandleMap,
}

/// Labels each fiber of an index-2 covering `f: Y -> X` by its least element
/// (level 0) and the other (level 1), reads off `phi(x, z)` as the level of
/// `s(x) * s(z)`, and checks the full extension law.
pub fn recover_index2_cocycle(f: &QuandleMap) -> Result<RecoveredExtension> {
    let idx = f.index()?;
    if idx.index != 2 || !idx.uniform_fibers {
        return Err(Error::NotIndex2 { index: idx.index });
    }
    if let Some((a, x, z)) = f.covering_failure() {
        return Err(Error::NotACovering(format!(
            "{x} and {z} lie in one fiber but {a}*{x} != {a}*{z}"
        )));
    }
    let (y, x) = (f.source(), f.target());
    let n = x.order();
    let fibers = f.fibers();
    let section: Vec<usize> = fibers.iter().map(|fib| fib[0]).collect();
    let level = |p: usize| u64::from(section[f.apply(p)] != p);
    let mut values = vec![0u64; n * n];
    for a in 0..n {
        for b in 0..n {
            values[a * n + b] = level(y.op(section[a], section[b]));
        }
    }
    for p in 0..y.order() {
        for r in 0..y.order() {
            let (xp, xr) = (f.apply(p), f.apply(r));
            let expected = (level(p) + values[xp * n + xr]) % 2;
            let found = level(y.op(p, r));
            if expected != found {
                return Err(Error::ExtensionLawFails {
                    x: xp,
                    z: xr,
                    level_a: level(p),
                    level_b: level(r),
                    expected,
                    found,
                });
            }
        }
    }
    let cocycle = Cocycle2::new(x, 2, values)?;
    let (e, _) = abelian_extension(x, &cocycle)?;
    let images = (0..e.order())
        .map(|p| fibers[p / 2][p % 2])
        .collect();
    let isomorphism = QuandleMap::new(e, y.clone(), images)?;
    if !isomorphism.is_homomorphism() || !isomorphism.is_bijective() {
        return Err(Error::TheoremViolation(
            "recovered extension is not isomorphic to the source".into(),
        ));
    }
    Ok(RecoveredExtension {
        cocycle,
        isomorphism,
    })
}

/// An inner automorphism fixing `fixed` but moving `moved`, both in one
/// fiber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberWitness {
    pub beta: Vec<usize>,
    pub fixed: usize,
    pub moved: usize,
}

/// Tests whether every inner automorphism of the source that fixes a point
/// of a fiber fixes that fiber pointwise. Abelian extensions always pass.
pub fn fiber_criterion(f: &QuandleMap, cap: usize) -> Result<Option<FiberWitness>> {
    f.ensure_epimorphism()?;
    let inn = f.source().inner_group(cap)?;
    let fibers = f.fibers();
    for beta in inn.elements() {
        if let Some(w) = fiber_violation(beta, &fibers) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn fiber_violation(beta: &Permutation, fibers: &[Vec<usize>]) -> Option<FiberWitness> {
    for fiber in fibers {
        let fixed = fiber.iter().find(|&&p| beta.apply(p) == p);
        let moved = fiber.iter().find(|&&p| beta.apply(p) != p);
        if let (Some(&fixed), Some(&moved)) = (fixed, moved) {
            return Some(FiberWitness {
                beta: beta.images().to_vec(),
                fixed,
                moved,
            });
        }
    }
    None
}

#[derive(Debug, Clone, Copy)]
pub struct PipelineOptions {
    pub max_cosets: usize,
    /// Largest enveloping group turned into a table for the preimage search.
    pub max_group_order: usize,
    /// Also colors each tangle by the extension and compares constancy with
    /// end-monochromaticity.
    pub check_end_monochromatic: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            max_cosets: DEFAULT_MAX_COSETS,
            max_group_order: 2000,
            check_end_monochromatic: true,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct KnotRecord {
    pub knot: String,
    pub strands: usize,
    pub word: Vec<i32>,
    pub invariant: GroupRingElt,
    pub constant: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub end_monochromatic: Option<bool>,
}

impl KnotRecord {
    fn new(knot: &BraidKnot, invariant: GroupRingElt) -> Self {
        KnotRecord {
            knot: knot.name().to_string(),
            strands: knot.strands(),
            word: knot.word().to_vec(),
            constant: invariant.is_constant(),
            invariant,
            end_monochromatic: None,
        }
    }
}

/// Outcome of building `E = E(X, Z_m, phi)` and comparing its conjugation
/// status with the invariants `Phi_phi`.
#[derive(Debug, Clone, Serialize)]
pub struct ExtensionVerdict {
    pub base_order: usize,
    pub modulus: u64,
    pub cocycle: Vec<Vec<u64>>,
    pub extension_order: usize,
    pub extension_connected: bool,
    pub extension_faithful: bool,
    pub conjugation: ConjugationReport,
    pub inn_preimage_found: bool,
    /// Whether `E = inn(Y)` was established for some `Y`.
    pub hypothesis_holds: bool,
    pub invariants: Vec<KnotRecord>,
    pub invariant_constant_on_corpus: bool,
    #[serde(skip)]
    pub extension: Quandle,
}

pub fn knot_invariants(x: &Quandle, phi: &Cocycle2, knots: &[BraidKnot]) -> Result<Vec<KnotRecord>> {
    knots
        .iter()
        .map(|k| Ok(KnotRecord::new(k, state_sum(x, phi, k)?)))
        .collect()
}

fn conjugation_report(e: &Quandle, opts: &PipelineOptions) -> Result<(ConjugationReport, bool)> {
    if !e.is_connected() {
        let report = ConjugationReport {
            verdict: Verdict::NotApplicable,
            group_order: None,
            collision: None,
        };
        return Ok((report, false));
    }
    let env = FiniteEnvelope::compute(e, opts.max_cosets)?;
    let collision = env.collision();
    let verdict = if collision.is_none() {
        Verdict::Yes
    } else {
        Verdict::No
    };
    let preimage = verdict == Verdict::Yes
        && inn_preimage(&env, e, opts.max_group_order).is_some_and(|(_, found)| found);
    let report = ConjugationReport {
        verdict,
        group_order: Some(env.order()),
        collision,
    };
    Ok((report, preimage))
}

/// Builds the extension, decides whether it is a conjugation quandle (and so
/// an inner image), and computes `Phi_phi` on every knot. Fails with
/// `TheoremViolation` if the extension is an inner image but some invariant
/// is not constant, or if constancy and end-monochromaticity disagree.
pub fn extension_verdict(
    x: &Quandle,
    phi: &Cocycle2,
    knots: &[BraidKnot],
    opts: &PipelineOptions,
) -> Result<ExtensionVerdict> {
    let (e, _) = abelian_extension(x, phi)?;
    let (conjugation, inn_preimage_found) = conjugation_report(&e, opts)?;
    let mut invariants = knot_invariants(x, phi, knots)?;
    if opts.check_end_monochromatic {
        for (record, knot) in invariants.iter_mut().zip(knots) {
            let mono = end_monochromatic(&e, &Tangle::new(knot.clone()))?;
            if mono != record.constant {
                return Err(Error::TheoremViolation(format!(
                    "knot {}: invariant {} but extension end monochromatic = {mono}",
                    record.knot, record.invariant
                )));
            }
            record.end_monochromatic = Some(mono);
        }
    }
    let constant = invariants.iter().all(|r| r.constant);
    let hypothesis_holds = conjugation.verdict == Verdict::Yes || inn_preimage_found;
    if hypothesis_holds && !constant {
        let bad = invariants.iter().find(|r| !r.constant).expect("nonconstant");
        return Err(Error::TheoremViolation(format!(
            "extension is an inner image but knot {} has invariant {}",
            bad.knot, bad.invariant
        )));
    }
    Ok(ExtensionVerdict {
        base_order: x.order(),
        modulus: phi.modulus(),
        cocycle: phi.rows(),
        extension_order: e.order(),
        extension_connected: e.is_connected(),
        extension_faithful: e.is_faithful(),
        conjugation,
        inn_preimage_found,
        hypothesis_holds,
        invariants,
        invariant_constant_on_corpus: constant,
        extension: e,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PowerReport {
    pub n: u64,
    pub d: u64,
    pub m: u64,
    /// `Phi_psi` with coefficients in `Z[Z_n]`.
    pub invariants: Vec<KnotRecord>,
    /// Per knot, exponents `k` with `a_k != 0` and `m` not dividing `k`.
    pub off_multiple_exponents: Vec<(String, Vec<u64>)>,
    pub vanishing_holds: bool,
    pub extension: ExtensionVerdict,
}

/// For `psi` mod `n` and `d | n`, checks the extension by `psi^d` and, when
/// it is an inner image, that `a_k(K) = 0` whenever `n/d` does not divide
/// `k`.
pub fn power_vanishing_check(
    x: &Quandle,
    psi: &Cocycle2,
    d: u64,
    knots: &[BraidKnot],
    opts: &PipelineOptions,
) -> Result<PowerReport> {
    let phi = psi.power(d)?;
    let n = psi.modulus();
    let m = phi.modulus();
    let invariants = knot_invariants(x, psi, knots)?;
    let off_multiple_exponents: Vec<(String, Vec<u64>)> = invariants
        .iter()
        .map(|r| {
            let ks = (0..n)
                .filter(|&k| k % m != 0 && r.invariant.coeff(k) != 0)
                .collect();
            (r.knot.clone(), ks)
        })
        .collect();
    let vanishing_holds = off_multiple_exponents.iter().all(|(_, ks)| ks.is_empty());
    let extension = extension_verdict(x, &phi, knots, opts)?;
    if extension.hypothesis_holds && !vanishing_holds {
        return Err(Error::TheoremViolation(format!(
            "extension by the {d}-th power is an inner image but coefficients off multiples of {m} survive"
        )));
    }
    Ok(PowerReport {
        n,
        d,
        m,
        invariants,
        off_multiple_exponents,
        vanishing_holds,
        extension,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub knot: String,
    pub invariant: GroupRingElt,
    pub statement: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub extension_order: usize,
    pub certificates: Vec<Certificate>,
    /// Absent when coset enumeration hit the cap.
    pub conjugation: Option<ConjugationReport>,
}

/// Any knot with a nonconstant `Phi_phi` certifies that `E(X, Z_m, phi)` is
/// not an inner image, hence not a conjugation quandle. Cross-checks against
/// the enveloping-group criterion when enumeration completes.
pub fn negative_certificates(
    x: &Quandle,
    phi: &Cocycle2,
    knots: &[BraidKnot],
    max_cosets: usize,
) -> Result<CertificateReport> {
    let (e, _) = abelian_extension(x, phi)?;
    let certificates: Vec<Certificate> = knot_invariants(x, phi, knots)?
        .into_iter()
        .filter(|r| !r.constant)
        .map(|r| Certificate {
            statement: format!(
                "E(X, Z_{}, phi) of order {} admits no finite Y with inn(Y) = E; witness {}",
                phi.modulus(),
                e.order(),
                r.knot
            ),
            knot: r.knot,
            invariant: r.invariant,
        })
        .collect();
    let conjugation = if e.is_connected() {
        match FiniteEnvelope::compute(&e, max_cosets) {
            Ok(env) => {
                let collision = env.collision();
                Some(ConjugationReport {
                    verdict: if collision.is_none() {
                        Verdict::Yes
                    } else {
                        Verdict::No
                    },
                    group_order: Some(env.order()),
                    collision,
                })
            }
            Err(Error::Capped { .. }) => None,
            Err(err) => return Err(err),
        }
    } else {
        Some(ConjugationReport {
            verdict: Verdict::NotApplicable,
            group_order: None,
            collision: None,
        })
    };
    if !certificates.is_empty() && conjugation.as_ref().map(|c| c.verdict) == Some(Verdict::Yes) {
        return Err(Error::TheoremViolation(format!(
            "certificate from knot {} contradicts a conjugation verdict",
            certificates[0].knot
        )));
    }
    Ok(CertificateReport {
        extension_order: e.order(),
        certificates,
        conjugation,
    })
}

/// Default cap on inner groups enumerated by [`fiber_criterion`].
pub const DEFAULT_FIBER_CAP: usize = DEFAULT_GROUP_CAP;
