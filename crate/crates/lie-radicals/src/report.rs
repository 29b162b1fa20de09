//! The full analysis record a run emits: flags, series profiles, every
//! radical with its basis, index pair, classification verdicts with
//! witnesses, and the named invariant checks used by `verify`.

use crate::algebra::LieAlgebra;
use crate::combinators::{
    derived_step, frattini_preradical, jacobson_preradical, lower_central_preradical, star,
    superpose_run,
};
use crate::error::Result;
use crate::products::quotient;
use crate::radicals::{
    frattini_ideal, jacobson_ideal, levi_radical, lower_central_radical, solvable_radical,
};
use crate::scalar::Scalar;
use crate::series::{
    derived_series, is_nilpotent, is_solvable, lower_central_series, nilpotency_index,
    solvability_index, solvability_index_of,
};
use crate::structure::{
    direct_summands, jacobson_free, largest_semisimple_ideal, submaximal_witness_family,
    subsimple, FrattiniFree, JacobsonFree, SubsimpleClass,
};
use crate::subspace::Subspace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Everything the analyzers need, computed once.
pub struct Analysis {
    pub algebra: LieAlgebra,
    pub centre: Subspace,
    pub derived_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub rad: Subspace,
    pub nilradical: Subspace,
    pub jacobson: Subspace,
    pub frattini: Subspace,
    pub levi_radical: Subspace,
    pub lower_central_radical: Subspace,
    pub largest_semisimple: Subspace,
    pub indices: (usize, usize),
    pub frattini_free: FrattiniFree,
    pub jacobson_free: JacobsonFree,
    pub subsimple: crate::structure::SubsimpleVerdict,
    pub summand_dims: Vec<usize>,
    pub summands_complete: bool,
    pub simple: bool,
}

impl Analysis {
    pub fn run(l: &LieAlgebra) -> Result<Analysis> {
        let rad = solvable_radical(l)?;
        let nil = crate::radicals::nilradical_given_rad(l, &rad)?;
        let k = jacobson_ideal(l)?;
        let phi = crate::radicals::frattini_ideal_given(l, Some(&nil))?;
        let indices = if l.dim() == 0 {
            (0, 0)
        } else {
            crate::radicals::radical_indices_given(l, &phi, &k)?
        };
        let ff = crate::structure::frattini_free_given(l, Some(&nil))?;
        let jf = jacobson_free(l)?;
        let sub = crate::structure::subsimple_given(l, &rad, Some(&nil))?;
        let summands = direct_summands(l)?;
        // for a semisimple algebra the summands are the simple components
        let simple = l.dim() > 0
            && rad.is_zero()
            && summands.complete
            && summands.components.len() == 1;
        Ok(Analysis {
            centre: l.centre(),
            derived_dims: derived_series(l).dims(),
            lower_central_dims: lower_central_series(l).dims(),
            rad,
            nilradical: nil,
            jacobson: k,
            frattini: phi,
            levi_radical: levi_radical(l),
            lower_central_radical: lower_central_radical(l),
            largest_semisimple: largest_semisimple_ideal(l)?,
            indices,
            frattini_free: ff,
            jacobson_free: jf,
            subsimple: sub,
            summand_dims: summands.components.iter().map(|c| c.dim()).collect(),
            summands_complete: summands.complete,
            simple,
            algebra: l.clone(),
        })
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct SubspaceJson {
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

impl SubspaceJson {
    pub fn of(s: &Subspace) -> SubspaceJson {
        SubspaceJson {
            dim: s.dim(),
            basis: s.to_text_rows(),
        }
    }

    pub fn to_subspace(&self, ambient: usize) -> Result<Subspace> {
        let rows: Result<Vec<Vec<Scalar>>> = self
            .basis
            .iter()
            .map(|row| row.iter().map(|c| c.parse()).collect())
            .collect();
        Ok(Subspace::from_rows(ambient, rows?))
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct FlagsJson {
    pub abelian: bool,
    pub nilpotent: Option<usize>,
    pub solvable: Option<usize>,
    pub semisimple: bool,
    pub simple: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct BlockJson {
    pub space: SubspaceJson,
    pub weights: Option<Vec<String>>,
    pub irreducible: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct FrattiniFreeJson {
    pub answer: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub violations: Vec<ViolationJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct WitnessJson {
    pub commutative_part: SubspaceJson,
    pub semisimple_part: SubspaceJson,
    pub commutative_ideal: SubspaceJson,
    pub blocks: Vec<BlockJson>,
    pub blocks_complete: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ViolationJson {
    pub condition: String,
    pub offending: SubspaceJson,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct JacobsonFreeJson {
    pub answer: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semisimple_part: Option<SubspaceJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub central_part: Option<SubspaceJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobson: Option<SubspaceJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SubsimpleJson {
    pub class: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

/// The versioned report: subspaces are echelon basis rows in ambient
/// coordinates so downstream tools can diff exactly.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct StructureReport {
    pub schema: u32,
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub flags: FlagsJson,
    pub centre_dim: usize,
    pub derived_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub solvable_radical: SubspaceJson,
    pub nilradical: SubspaceJson,
    pub jacobson_ideal: SubspaceJson,
    pub frattini_ideal: SubspaceJson,
    pub levi_radical: SubspaceJson,
    pub largest_semisimple_ideal: SubspaceJson,
    pub r_frattini: usize,
    pub r_jacobson: usize,
    pub frattini_free: FrattiniFreeJson,
    pub jacobson_free: JacobsonFreeJson,
    pub subsimple: SubsimpleJson,
    pub summand_dims: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

pub fn build_report(l: &LieAlgebra, extra_notes: Vec<String>) -> Result<StructureReport> {
    let a = Analysis::run(l)?;
    let ff = match &a.frattini_free {
        FrattiniFree::Yes(w) => FrattiniFreeJson {
            answer: true,
            witness: Some(WitnessJson {
                commutative_part: SubspaceJson::of(&w.c),
                semisimple_part: SubspaceJson::of(&w.s),
                commutative_ideal: SubspaceJson::of(&w.j),
                blocks: w
                    .blocks
                    .iter()
                    .map(|b| BlockJson {
                        space: SubspaceJson::of(&b.space),
                        weights: b
                            .weights
                            .as_ref()
                            .map(|ws| ws.iter().map(|w| w.to_string()).collect()),
                        irreducible: b.irreducible,
                    })
                    .collect(),
                blocks_complete: w.blocks_complete,
            }),
            violations: vec![],
        },
        FrattiniFree::No(violations) => FrattiniFreeJson {
            answer: false,
            witness: None,
            violations: violations
                .iter()
                .map(|v| ViolationJson {
                    condition: v.label().to_string(),
                    offending: SubspaceJson::of(v.offending()),
                })
                .collect(),
        },
    };
    let jf = match &a.jacobson_free {
        JacobsonFree::Yes {
            semisimple,
            central,
        } => JacobsonFreeJson {
            answer: true,
            semisimple_part: Some(SubspaceJson::of(semisimple)),
            central_part: Some(SubspaceJson::of(central)),
            jacobson: None,
        },
        JacobsonFree::No { jacobson } => JacobsonFreeJson {
            answer: false,
            semisimple_part: None,
            central_part: None,
            jacobson: Some(SubspaceJson::of(jacobson)),
        },
    };
    let mut notes = extra_notes;
    if !a.summands_complete {
        notes.push("summand split incomplete over the base field".into());
    }
    notes.extend(a.subsimple.notes.iter().cloned());
    Ok(StructureReport {
        schema: 1,
        name: l.name.clone(),
        dim: l.dim(),
        basis: l.labels().to_vec(),
        flags: FlagsJson {
            abelian: l.is_abelian(),
            nilpotent: nilpotency_index(l),
            solvable: solvability_index(l),
            semisimple: a.rad.is_zero(),
            simple: a.simple,
        },
        centre_dim: a.centre.dim(),
        derived_dims: a.derived_dims.clone(),
        lower_central_dims: a.lower_central_dims.clone(),
        solvable_radical: SubspaceJson::of(&a.rad),
        nilradical: SubspaceJson::of(&a.nilradical),
        jacobson_ideal: SubspaceJson::of(&a.jacobson),
        frattini_ideal: SubspaceJson::of(&a.frattini),
        levi_radical: SubspaceJson::of(&a.levi_radical),
        largest_semisimple_ideal: SubspaceJson::of(&a.largest_semisimple),
        r_frattini: a.indices.0,
        r_jacobson: a.indices.1,
        frattini_free: ff,
        jacobson_free: jf,
        subsimple: SubsimpleJson {
            class: a.subsimple.class.as_str().to_string(),
            notes: a.subsimple.notes.clone(),
        },
        summand_dims: a.summand_dims.clone(),
        notes,
    })
}

/// One named invariant check with its outcome.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, outcome: Result<bool>, results: &mut Vec<CheckResult>) {
    match outcome {
        Ok(pass) => results.push(CheckResult {
            name,
            pass,
            detail: String::new(),
        }),
        Err(e) => results.push(CheckResult {
            name,
            pass: false,
            detail: e.to_string(),
        }),
    }
}

/// Runs the named invariant suite on one algebra: the inclusion chain,
/// index inequalities, combinator identities, certificates and witness
/// checks. Used by the `verify` command and the acceptance suite.
pub fn verify_invariants(l: &LieAlgebra) -> Vec<CheckResult> {
    let mut out = Vec::new();

    let analysis = match Analysis::run(l) {
        Ok(a) => a,
        Err(e) => {
            out.push(CheckResult {
                name: "analysis_completes",
                pass: false,
                detail: e.to_string(),
            });
            return out;
        }
    };
    out.push(CheckResult {
        name: "analysis_completes",
        pass: true,
        detail: String::new(),
    });
    let a = &analysis;

    let central = || -> Result<Subspace> { l.centre().intersect(&l.derived_subalgebra()) };
    check(
        "chain_central_derived_in_frattini",
        central().and_then(|c| a.frattini.contains(&c)),
        &mut out,
    );
    check(
        "chain_frattini_in_jacobson",
        a.jacobson.contains(&a.frattini),
        &mut out,
    );
    check(
        "chain_jacobson_in_nilradical",
        a.nilradical.contains(&a.jacobson),
        &mut out,
    );
    check(
        "chain_nilradical_in_radical",
        a.rad.contains(&a.nilradical),
        &mut out,
    );

    check(
        "solvable_jacobson_is_derived",
        Ok(!is_solvable(l) || a.jacobson == l.derived_subalgebra()),
        &mut out,
    );

    // levi radical: perfect, with solvable quotient
    check(
        "levi_radical_is_perfect",
        l.bracket_spaces(&a.levi_radical, &a.levi_radical)
            .map(|b| b == a.levi_radical),
        &mut out,
    );
    check(
        "levi_radical_quotient_solvable",
        (|| {
            let (q, _, _) = quotient(l, &a.levi_radical)?;
            Ok(is_solvable(&q))
        })(),
        &mut out,
    );

    // combinator identities
    check(
        "superpose_derived_step_is_levi_radical",
        superpose_run(&derived_step(), l).map(|r| r.stable == a.levi_radical),
        &mut out,
    );
    check(
        "superpose_lower_central_radical_is_levi_radical",
        superpose_run(&lower_central_preradical(), l).map(|r| r.stable == a.levi_radical),
        &mut out,
    );
    check(
        "star_fixes_frattini",
        star(&frattini_preradical()).eval(l).map(|s| s == a.frattini),
        &mut out,
    );
    check(
        "star_fixes_jacobson",
        star(&jacobson_preradical()).eval(l).map(|s| s == a.jacobson),
        &mut out,
    );
    check(
        "jacobson_iteration_reaches_zero",
        superpose_run(&jacobson_preradical(), l).map(|r| r.stable.is_zero()),
        &mut out,
    );

    // nilpotent special case
    if is_nilpotent(l) && l.dim() > 0 {
        let i_s = solvability_index(l).unwrap_or(0);
        check(
            "nilpotent_frattini_equals_jacobson_equals_derived",
            Ok(a.frattini == a.jacobson && a.jacobson == l.derived_subalgebra()),
            &mut out,
        );
        check(
            "nilpotent_indices_equal_solvability_index",
            Ok(a.indices == (i_s, i_s)),
            &mut out,
        );
    }

    // index sandwich
    if l.dim() > 0 {
        let i_nil = solvability_index_of(l, &a.nilradical).ok().flatten();
        let i_k = solvability_index_of(l, &a.jacobson).ok().flatten();
        check(
            "index_sandwich",
            Ok(match (i_nil, i_k) {
                (Some(inil), Some(ik)) => {
                    let (rf, rj) = a.indices;
                    inil <= rf && rf <= rj && rj == ik + 1 && rj <= inil + 1 && rj <= rf + 1
                }
                _ => false,
            }),
            &mut out,
        );
    }

    // radical certificate and nilradical sampling
    check(
        "radical_certificate",
        (|| {
            if !l.is_ideal(&a.rad)? || solvability_index_of(l, &a.rad)?.is_none() {
                return Ok(false);
            }
            if a.rad.is_full() {
                return Ok(true);
            }
            let (q, _, _) = quotient(l, &a.rad)?;
            Ok(q.killing_is_nondegenerate())
        })(),
        &mut out,
    );
    check(
        "nilradical_membership_sampling",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x7665_7269);
            for _ in 0..50 {
                let coords: Vec<Scalar> = (0..a.rad.dim())
                    .map(|_| Scalar::from_int(rng.gen_range(-3i64..=3)))
                    .collect();
                let x = a.rad.expand(&coords);
                if l.ad(&x).pow_is_nilpotent() != a.nilradical.member(&x) {
                    return Ok(false);
                }
            }
            Ok(true)
        })(),
        &mut out,
    );

    // cross-module consistency and witnesses
    check(
        "frattini_free_iff_frattini_vanishes",
        Ok(a.frattini_free.is_yes() == a.frattini.is_zero()),
        &mut out,
    );
    if let FrattiniFree::Yes(w) = &a.frattini_free {
        check("frattini_witness_checklist", w.verify(l).map(|_| true), &mut out);
        check(
            "submaximal_family_sound",
            (|| {
                let family = submaximal_witness_family(l)?;
                let mut meet = l.whole();
                for j in &family {
                    if !j.contains(&a.frattini)? {
                        return Ok(false);
                    }
                    let (q, _, _) = quotient(l, j)?;
                    if !subsimple(&q)?.class.is_subsimple() {
                        return Ok(false);
                    }
                    meet = meet.intersect(j)?;
                }
                Ok(meet.is_zero())
            })(),
            &mut out,
        );
        check(
            "frattini_free_radical_index_short",
            solvability_index_of(l, &a.rad).map(|i| i.map_or(false, |i| i <= 2)),
            &mut out,
        );
        // the commutative ideal of the witness is the nilradical, and it
        // contains every commutative ideal (the centre in particular)
        check(
            "frattini_free_witness_ideal_is_nilradical",
            Ok(w.j == a.nilradical),
            &mut out,
        );
        check(
            "frattini_free_witness_ideal_contains_centre",
            w.j.contains(&l.centre()),
            &mut out,
        );
    }
    check(
        "jacobson_free_iff_jacobson_vanishes",
        Ok(a.jacobson_free.is_yes() == a.jacobson.is_zero()),
        &mut out,
    );
    if a.jacobson_free.is_yes() && is_solvable(l) {
        check("solvable_jacobson_free_is_abelian", Ok(l.is_abelian()), &mut out);
    }
    if a.frattini_free.is_yes() && is_solvable(l) {
        let s = derived_series(l);
        check(
            "frattini_free_solvable_second_derived_zero",
            Ok(s.terms.get(2).map_or(true, |t| t.is_zero())),
            &mut out,
        );
    }
    check(
        "subsimple_implies_frattini_free",
        Ok(!a.subsimple.class.is_subsimple() || a.frattini_free.is_yes()),
        &mut out,
    );

    // balancedness spot-check on the computed ideals
    check(
        "balanced_on_sampled_ideals",
        (|| {
            for ideal in [&a.jacobson, &a.nilradical, &a.rad, &a.levi_radical] {
                if ideal.is_zero() || ideal.is_full() {
                    continue;
                }
                let (sub, incl) = crate::products::induced_algebra(l, ideal)?;
                let phi_sub = frattini_ideal(&sub)?;
                let k_sub = jacobson_ideal(&sub)?;
                let map = |s: &Subspace| -> Subspace {
                    Subspace::from_rows(
                        l.dim(),
                        s.basis_rows().map(|r| incl.apply(r)).collect::<Vec<_>>(),
                    )
                };
                if !a.frattini.contains(&map(&phi_sub))? || !a.jacobson.contains(&map(&k_sub))? {
                    return Ok(false);
                }
            }
            Ok(true)
        })(),
        &mut out,
    );

    // the frattini and jacobson ideals split over ideal direct summands
    check(
        "radicals_split_over_summands",
        (|| {
            let summands = direct_summands(l)?;
            if summands.components.len() < 2 {
                return Ok(true);
            }
            let mut phi_sum = l.zero_subspace();
            let mut k_sum = l.zero_subspace();
            for piece in &summands.components {
                let (sub, incl) = crate::products::induced_algebra(l, piece)?;
                for row in frattini_ideal(&sub)?.basis_rows() {
                    phi_sum.insert_row(&incl.apply(row));
                }
                for row in jacobson_ideal(&sub)?.basis_rows() {
                    k_sum.insert_row(&incl.apply(row));
                }
            }
            Ok(phi_sum == a.frattini && k_sum == a.jacobson)
        })(),
        &mut out,
    );

    // largest semisimple ideal: certificate plus hereditary samples
    check(
        "largest_semisimple_certificate",
        (|| {
            if !l.is_ideal(&a.largest_semisimple)? {
                return Ok(false);
            }
            Ok(a.largest_semisimple.intersect(&a.rad)?.is_zero())
        })(),
        &mut out,
    );
    check(
        "largest_semisimple_hereditary_samples",
        (|| {
            for ideal in [&a.levi_radical, &a.largest_semisimple] {
                if ideal.is_zero() || ideal.is_full() {
                    continue;
                }
                let (sub, incl) = crate::products::induced_algebra(l, ideal)?;
                let inner = largest_semisimple_ideal(&sub)?;
                let mapped = Subspace::from_rows(
                    l.dim(),
                    inner.basis_rows().map(|r| incl.apply(r)).collect::<Vec<_>>(),
                );
                if mapped != a.largest_semisimple.intersect(ideal)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })(),
        &mut out,
    );

    // perfect ideals are characteristic (cheap only at small dimension)
    if l.dim() <= 6 {
        check(
            "perfect_ideal_is_characteristic",
            (|| {
                if a.levi_radical.is_zero() {
                    return Ok(true);
                }
                l.is_characteristic(&a.levi_radical)
            })(),
            &mut out,
        );
    }

    if a.subsimple.class == SubsimpleClass::ClassII {
        check(
            "class_ii_module_is_irreducible",
            crate::envelope::module_is_abs_irreducible(l, &a.nilradical),
            &mut out,
        );
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn report_roundtrips_through_json() {
        let l = catalog::build("heisenberg3", &[]).unwrap();
        let report = build_report(&l, vec![]).unwrap();
        let text = serde_json::to_string_pretty(&report).unwrap();
        let back: StructureReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.schema, 1);
        assert_eq!(back.frattini_ideal, report.frattini_ideal);
        assert_eq!(back.r_frattini, 2);
        assert_eq!(back.r_jacobson, 2);
        assert_eq!(back.frattini_ideal.dim, 1);
    }

    #[test]
    fn abelian_report_has_trivial_radicals() {
        let l = catalog::build("abelian", &[3]).unwrap();
        let r = build_report(&l, vec![]).unwrap();
        assert!(r.flags.abelian);
        assert_eq!(r.solvable_radical.dim, 3);
        assert_eq!(r.nilradical.dim, 3);
        assert_eq!(r.jacobson_ideal.dim, 0);
        assert_eq!(r.frattini_ideal.dim, 0);
        assert_eq!(r.largest_semisimple_ideal.dim, 0);
    }

    #[test]
    fn zero_dimensional_algebra_analyzes_cleanly() {
        let l = catalog::build("abelian", &[0]).unwrap();
        let a = Analysis::run(&l).unwrap();
        assert_eq!(a.indices, (0, 0));
        assert!(a.frattini_free.is_yes());
        assert!(a.jacobson_free.is_yes());
        assert_eq!(a.subsimple.class.as_str(), "not_subsimple");
        assert!(a.summand_dims.is_empty());
        let report = build_report(&l, vec![]).unwrap();
        assert_eq!(report.dim, 0);
        assert!(serde_json::to_string(&report).is_ok());
    }

    #[test]
    fn verify_passes_on_the_catalog_samples() {
        for (name, params) in [
            ("sl", vec![2usize]),
            ("cext4", vec![]),
            ("t", vec![3]),
            ("classII", vec![2]),
        ] {
            let l = catalog::build(name, &params).unwrap();
            let results = verify_invariants(&l);
            for r in &results {
                assert!(r.pass, "{name}: {} failed: {}", r.name, r.detail);
            }
        }
    }
}
