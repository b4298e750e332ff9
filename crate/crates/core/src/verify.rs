//! Formula-versus-brute-force verification of single instances and sweeps
//! over many of them.

use std::time::Instant;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distance::is_connected;
use crate::error::{Error, Result};
use crate::formula::{
    analyze_member, decompose_with, equality_condition_with, ApexJoinTerms, DecompositionReport,
    FormulaTerms, MemberAnalysis, RepresentativeChoice,
};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::lexicographic::{product, Family};
use crate::named::GraphSpec;
use crate::solver::{dimension_with, DimensionResult, GeneratorKind, SolverConfig};

/// Largest order accepted by [`enumerate_labeled`].
pub const MAX_LABELED_ORDER: usize = 7;
/// Largest order accepted by [`enumerate_small_connected`].
pub const MAX_SWEEP_BASE_ORDER: usize = 5;

/// Every labeled graph on `n` vertices. Graph `k` has the edge set given by
/// the bits of `k` over the pairs `(0,1), (0,2), .., (n-2,n-1)`.
pub fn enumerate_labeled(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_LABELED_ORDER {
        return Err(Error::OverCap {
            what: "labeled graph enumeration",
            order: n,
            cap: MAX_LABELED_ORDER,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    Ok((0u64..1 << pairs.len())
        .map(|bits| {
            let mut g = Graph::empty(n).expect("order within cap");
            for (k, &(u, v)) in pairs.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            g
        })
        .collect())
}

/// Connected labeled graphs on `n ≤ 5` vertices, without isomorphism
/// reduction. Larger bases should come from a graph6 file.
pub fn enumerate_small_connected(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_SWEEP_BASE_ORDER {
        return Err(Error::invalid(format!(
            "exhaustive base enumeration stops at order {MAX_SWEEP_BASE_ORDER}; \
             pass larger bases as a graph6 file"
        )));
    }
    Ok(enumerate_labeled(n)?
        .into_iter()
        .filter(is_connected)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Skipped => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceId {
    pub base: String,
    pub members: Vec<String>,
}

impl InstanceId {
    pub fn of(fam: &Family) -> Self {
        InstanceId {
            base: GraphSpec::of_graph(fam.base()).to_string(),
            members: fam
                .members()
                .iter()
                .map(|h| GraphSpec::of_graph(h).to_string())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaValues {
    pub dim_l: FormulaTerms,
    pub adim_l: FormulaTerms,
    pub via_k1: ApexJoinTerms,
    pub equality_condition: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteForceValues {
    pub product_order: usize,
    pub dim_l: DimensionResult,
    pub adim_l: DimensionResult,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub instance: InstanceId,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<FormulaValues>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brute_force: Option<BruteForceValues>,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl VerificationReport {
    fn skipped(instance: InstanceId, reason: String) -> Self {
        VerificationReport {
            instance,
            status: Status::Skipped,
            skip_reason: Some(reason),
            formula: None,
            brute_force: None,
            checks: Vec::new(),
            decomposition: None,
            elapsed_ms: None,
        }
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub solver: SolverConfig,
    /// Toggle this product edge before the brute-force search. Only useful
    /// for checking that the harness reports failures.
    pub flip_product_edge: Option<(usize, usize)>,
    pub record_timing: bool,
}

pub const CHECK_DIM_L: &str = "dim_l_formula_matches_brute_force";
pub const CHECK_ADIM_L: &str = "adim_l_formula_matches_brute_force";
pub const CHECK_VIA_K1: &str = "apex_join_formula_matches_dim_l_formula";
pub const CHECK_RHO_ORDER: &str = "rho_prime_at_least_rho";
pub const CHECK_EQUAL_IFF: &str = "dims_equal_iff_rho_equals_rho_prime";
pub const CHECK_CONDITION: &str = "equality_condition_matches_brute_force";

fn is_cap_error(e: &Error) -> bool {
    matches!(e, Error::OverCap { .. } | Error::TooManyBases { .. })
}

/// Runs every check on one instance. Instances too large for the exhaustive
/// search come back as [`Status::Skipped`]; malformed ones are errors.
pub fn verify_instance_with(
    fam: &Family,
    opts: &VerifyOptions,
    members: Option<&[MemberAnalysis]>,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let instance = InstanceId::of(fam);
    if fam.base().order() < 2 {
        return Err(Error::invalid("the base graph needs at least two vertices"));
    }
    if !is_connected(fam.base()) {
        return Err(Error::Disconnected {
            what: "instance verification",
        });
    }
    let order = fam.product_order();
    if order > opts.solver.max_order {
        return Ok(VerificationReport::skipped(
            instance,
            format!(
                "product order {order} exceeds the search cap {}",
                opts.solver.max_order
            ),
        ));
    }

    let owned;
    let members = match members {
        Some(m) => m,
        None => {
            let analysed: Result<Vec<_>> = fam
                .members()
                .iter()
                .map(|h| analyze_member(h, &opts.solver))
                .collect();
            match analysed {
                Ok(m) => {
                    owned = m;
                    &owned
                }
                Err(e) if is_cap_error(&e) => {
                    return Ok(VerificationReport::skipped(instance, e.to_string()))
                }
                Err(e) => return Err(e),
            }
        }
    };

    let report = decompose_with(fam, members, &RepresentativeChoice::default())?;
    let condition = equality_condition_with(fam, members)?;
    let formula = FormulaValues {
        dim_l: report.dim_l_terms(),
        adim_l: report.adim_l_terms(),
        via_k1: report.apex_join_terms(),
        equality_condition: condition,
    };

    let mut graph = product(fam)?.graph;
    if let Some((u, v)) = opts.flip_product_edge {
        if u == v || u >= graph.order() || v >= graph.order() {
            return Err(Error::invalid(format!("cannot flip product edge {u}-{v}")));
        }
        graph.toggle_edge(u, v);
    }
    let brute_dim = dimension_with(&graph, GeneratorKind::LocalMetric, &opts.solver);
    let brute_adim = dimension_with(&graph, GeneratorKind::LocalAdjacency, &opts.solver);
    let (dim_l, adim_l) = match (brute_dim, brute_adim) {
        (Ok(d), Ok(a)) => (d, a),
        (Err(e), _) | (_, Err(e)) => {
            if is_cap_error(&e) {
                return Ok(VerificationReport::skipped(instance, e.to_string()));
            }
            return Err(e);
        }
    };

    let (rho, rho_prime) = (report.rho.value, report.rho_prime.value);
    let two_term = report.adim_l_sum() + report.twin_term();
    let checks = vec![
        Check {
            name: CHECK_DIM_L.into(),
            pass: formula.dim_l.total == dim_l.value,
            detail: format!("formula {} vs brute force {}", formula.dim_l.total, dim_l.value),
        },
        Check {
            name: CHECK_ADIM_L.into(),
            pass: formula.adim_l.total == adim_l.value,
            detail: format!("formula {} vs brute force {}", formula.adim_l.total, adim_l.value),
        },
        Check {
            name: CHECK_VIA_K1.into(),
            pass: formula.via_k1.total == formula.dim_l.total,
            detail: format!("apex joins {} vs {}", formula.via_k1.total, formula.dim_l.total),
        },
        Check {
            name: CHECK_RHO_ORDER.into(),
            pass: rho_prime >= rho,
            detail: format!("rho {rho}, rho_prime {rho_prime}"),
        },
        Check {
            name: CHECK_EQUAL_IFF.into(),
            pass: (dim_l.value == adim_l.value) == (rho == rho_prime),
            detail: format!(
                "dim_l {} adim_l {}; rho {rho} rho_prime {rho_prime}",
                dim_l.value, adim_l.value
            ),
        },
        Check {
            name: CHECK_CONDITION.into(),
            pass: condition == (dim_l.value == two_term && adim_l.value == two_term),
            detail: format!(
                "condition {condition}; dim_l {} adim_l {} two-term sum {two_term}",
                dim_l.value, adim_l.value
            ),
        },
    ];
    let status = if checks.iter().all(|c| c.pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(VerificationReport {
        instance,
        status,
        skip_reason: None,
        formula: Some(formula),
        brute_force: Some(BruteForceValues {
            product_order: graph.order(),
            dim_l,
            adim_l,
        }),
        checks,
        decomposition: Some(report),
        elapsed_ms: opts
            .record_timing
            .then(|| started.elapsed().as_secs_f64() * 1e3),
    })
}

pub fn verify_instance(fam: &Family) -> Result<VerificationReport> {
    verify_instance_with(fam, &VerifyOptions::default(), None)
}

/// A named member graph available to a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoolEntry {
    pub spec: String,
    pub graph: Graph,
}

impl PoolEntry {
    pub fn parse(spec: &str) -> Result<Self> {
        let parsed: GraphSpec = spec.parse()?;
        Ok(PoolEntry {
            spec: parsed.to_string(),
            graph: parsed.build()?,
        })
    }
}

/// Reads a pool file: one graph spec per line, `#` comments.
pub fn parse_pool(text: &str) -> Result<Vec<PoolEntry>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(PoolEntry::parse(line).map_err(|e| Error::FamilyFile {
            line: idx + 1,
            reason: e.to_string(),
        })?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSource {
    /// All connected labeled graphs of order `2..=max_order` (at most 5).
    Exhaustive { max_order: usize },
    /// Explicit bases, e.g. read from a graph6 file.
    Graphs(Vec<Graph>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Sampling {
    /// Every base with every tuple of pool members.
    Exhaustive,
    /// Bases of order `<= exhaustive_up_to` are swept exhaustively; for each
    /// larger order, `samples` instances are drawn with base and members
    /// uniform.
    Random {
        seed: u64,
        samples: usize,
        exhaustive_up_to: usize,
    },
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub bases: BaseSource,
    pub pool: Vec<PoolEntry>,
    pub sampling: Sampling,
    pub solver: SolverConfig,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderTally {
    pub base_order: usize,
    pub bases: usize,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// Everything needed to replay a failing instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailureDump {
    pub base_graph6: String,
    pub family_file: String,
    pub report: VerificationReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub pool: Vec<String>,
    pub sampling: Sampling,
    pub search_cap: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub by_base_order: Vec<OrderTally>,
    pub failures: Vec<FailureDump>,
}

/// Bases grouped by order, ascending, each group in source order.
fn grouped_bases(source: &BaseSource) -> Result<Vec<(usize, Vec<Graph>)>> {
    match source {
        BaseSource::Exhaustive { max_order } => (2..=*max_order)
            .map(|n| Ok((n, enumerate_small_connected(n)?)))
            .collect(),
        BaseSource::Graphs(graphs) => {
            for g in graphs {
                if g.order() < 2 || !is_connected(g) {
                    return Err(Error::invalid(format!(
                        "sweep base {} must be connected with at least two vertices",
                        to_graph6(g)
                    )));
                }
            }
            let mut orders: Vec<usize> = graphs.iter().map(Graph::order).collect();
            orders.sort_unstable();
            orders.dedup();
            Ok(orders
                .into_iter()
                .map(|n| (n, graphs.iter().filter(|g| g.order() == n).cloned().collect()))
                .collect())
        }
    }
}

/// The instance stream as `(base, member pool indices)`, fixed before any
/// evaluation so the order never depends on scheduling.
fn instance_stream(
    groups: &[(usize, Vec<Graph>)],
    pool_len: usize,
    sampling: Sampling,
) -> Vec<(&Graph, Vec<usize>)> {
    let mut out = Vec::new();
    let mut rng = match sampling {
        Sampling::Random { seed, .. } => Some(ChaCha8Rng::seed_from_u64(seed)),
        Sampling::Exhaustive => None,
    };
    for (order, bases) in groups {
        let sample_count = match sampling {
            Sampling::Random {
                samples,
                exhaustive_up_to,
                ..
            } if *order > exhaustive_up_to => Some(samples),
            _ => None,
        };
        match (sample_count, rng.as_mut()) {
            (Some(samples), Some(rng)) => {
                for _ in 0..samples {
                    let base = &bases[rng.gen_range(0..bases.len())];
                    let picks = (0..*order).map(|_| rng.gen_range(0..pool_len)).collect();
                    out.push((base, picks));
                }
            }
            _ => {
                for base in bases {
                    for picks in (0..*order)
                        .map(|_| 0..pool_len)
                        .multi_cartesian_product()
                    {
                        out.push((base, picks));
                    }
                }
            }
        }
    }
    out
}

pub fn sweep(cfg: &SweepConfig) -> Result<SweepSummary> {
    if cfg.pool.is_empty() {
        return Err(Error::invalid("the member pool is empty"));
    }
    let groups = grouped_bases(&cfg.bases)?;
    let analyses: Vec<std::result::Result<MemberAnalysis, String>> = cfg
        .pool
        .iter()
        .map(|p| match analyze_member(&p.graph, &cfg.solver) {
            Ok(a) => Ok(a),
            Err(e) if is_cap_error(&e) => Err(e.to_string()),
            Err(e) => Err(format!("{}: {e}", p.spec)),
        })
        .collect();

    let stream = instance_stream(&groups, cfg.pool.len(), cfg.sampling);
    let opts = VerifyOptions {
        solver: cfg.solver,
        ..Default::default()
    };
    let reports: Vec<Result<(usize, Family, VerificationReport)>> = stream
        .par_iter()
        .map(|(base, picks)| {
            let members = picks.iter().map(|&p| cfg.pool[p].graph.clone()).collect();
            let fam = Family::new((*base).clone(), members)?;
            let member_info: std::result::Result<Vec<MemberAnalysis>, String> =
                picks.iter().map(|&p| analyses[p].clone()).collect();
            let report = match member_info {
                Ok(info) => verify_instance_with(&fam, &opts, Some(&info))?,
                Err(reason) => VerificationReport::skipped(InstanceId::of(&fam), reason),
            };
            Ok((base.order(), fam, report))
        })
        .collect();

    let mut tallies: Vec<OrderTally> = groups
        .iter()
        .map(|(n, bases)| OrderTally {
            base_order: *n,
            bases: bases.len(),
            instances: 0,
            passed: 0,
            failed: 0,
            skipped: 0,
        })
        .collect();
    let mut failures = Vec::new();
    for r in reports {
        let (order, fam, report) = r?;
        let tally = tallies
            .iter_mut()
            .find(|t| t.base_order == order)
            .expect("every order has a tally");
        tally.instances += 1;
        match report.status {
            Status::Pass => tally.passed += 1,
            Status::Skipped => tally.skipped += 1,
            Status::Fail => {
                tally.failed += 1;
                failures.push(FailureDump {
                    base_graph6: to_graph6(fam.base()),
                    family_file: fam.to_family_file(),
                    report,
                });
            }
        }
    }
    Ok(SweepSummary {
        pool: cfg.pool.iter().map(|p| p.spec.clone()).collect(),
        sampling: cfg.sampling,
        search_cap: cfg.solver.max_order,
        total: tallies.iter().map(|t| t.instances).sum(),
        passed: tallies.iter().map(|t| t.passed).sum(),
        failed: tallies.iter().map(|t| t.failed).sum(),
        skipped: tallies.iter().map(|t| t.skipped).sum(),
        by_base_order: tallies,
        failures,
    })
}
