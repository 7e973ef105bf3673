//! Measured-versus-predicted verification over a catalog of groups.
//!
//! For each group both complements are built, their stars measured by
//! breadth-first search, and the result compared with the closed-form
//! predictions from [`crate::classify`]. Mismatches are collected as
//! [`TheoremViolation`]s rather than aborting the sweep.

mod catalog;
mod oracle;

use std::io;
use std::path::Path;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

pub use catalog::{
    abelian_invariant_factors, build_catalog, catalog_exprs, CatalogEntry, CatalogSpec, SEMIDIRECT_MAX_M,
};
pub use oracle::{audit_phi, audit_psi, generated_subgroup, oracle_pair_cyclic, power_universal_vertices};

use crate::classify::{
    is_phi_group, predict_enhanced_diameter_with, predict_power_diameter, DiameterPrediction, PhiWitness, Reason,
    Witness,
};
use crate::graphs::{
    complement, components, diameter_with_witness, enhanced_power_graph, power_graph_from, star, GraphKind,
    SimpleGraph, StarDecomposition,
};
use crate::group::{ElementId, GroupTable};
use crate::subgroups::{cyc_set, maximal_cyclic_from_lattice, CyclicLattice, MaximalCyclicFamily};

/// Shared per-group structures: ⟨g⟩ for all g, M(G), and Cyc(G).
pub struct GroupAnalysis<'g> {
    pub group: &'g GroupTable,
    pub lattice: CyclicLattice,
    pub family: MaximalCyclicFamily,
    pub cyc: FixedBitSet,
}

/// Star of a complement with its measured metrics.
pub struct Measurement {
    pub star: StarDecomposition,
    pub components: usize,
    pub diameter: Option<usize>,
    /// Lexicographically first pair of elements at distance `diameter`.
    pub farthest_pair: Option<(ElementId, ElementId)>,
}

impl<'g> GroupAnalysis<'g> {
    pub fn new(group: &'g GroupTable) -> Self {
        let lattice = CyclicLattice::new(group);
        let family = maximal_cyclic_from_lattice(group, &lattice);
        let cyc = cyc_set(group, &family);
        GroupAnalysis { group, lattice, family, cyc }
    }

    pub fn graph(&self, kind: GraphKind) -> SimpleGraph {
        match kind {
            GraphKind::Power => power_graph_from(self.group, &self.lattice),
            GraphKind::Enhanced => enhanced_power_graph(self.group, &self.family),
        }
    }

    pub fn predict(&self, kind: GraphKind) -> Result<DiameterPrediction, crate::classify::ClassifyError> {
        match kind {
            GraphKind::Power => predict_power_diameter(self.group),
            GraphKind::Enhanced => predict_enhanced_diameter_with(self.group, &self.family, &self.cyc),
        }
    }

    pub fn measure(&self, kind: GraphKind) -> Measurement {
        let star = star(&complement(&self.graph(kind)));
        let comps = components(&star.graph).len();
        let (diameter, farthest_pair) = if comps == 1 {
            let (d, u, v) = diameter_with_witness(&star.graph).expect("connected non-empty graph");
            (Some(d), Some((star.graph.element_of(u), star.graph.element_of(v))))
        } else {
            (None, None)
        };
        Measurement { star, components: comps, diameter, farthest_pair }
    }

    pub fn is_applicable(&self, kind: GraphKind) -> bool {
        match kind {
            GraphKind::Power => !self.group.is_cyclic_p_group(),
            GraphKind::Enhanced => !self.group.is_cyclic(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordWitnesses {
    /// Ψ witness element, or the Φ pair `[x, y]`.
    pub predicted: Vec<ElementId>,
    pub farthest_pair: Vec<ElementId>,
}

/// One (group, graph kind) comparison. Serialized keys keep declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub name: String,
    pub order: usize,
    pub kind: GraphKind,
    pub applicable: bool,
    pub predicted: Option<u8>,
    pub reason: Option<Reason>,
    pub measured: Option<usize>,
    pub nontrivial_components: usize,
    pub isolated_count: usize,
    #[serde(rename = "match")]
    pub matched: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<RecordWitnesses>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("theorem violation for {name}: {}", .failures.join("; "))]
pub struct TheoremViolation {
    pub name: String,
    pub failures: Vec<String>,
    pub records: Vec<VerificationRecord>,
}

/// Universal vertices of the power graph of a group that is not a cyclic p-group:
/// e and the generators for cyclic G, e and the involution for generalized
/// quaternion G, otherwise e alone.
pub fn expected_power_isolated(group: &GroupTable) -> Vec<usize> {
    let n = group.order();
    let orders = group.orders();
    if group.is_cyclic() {
        return (0..n).filter(|&g| g == 0 || orders[g] as usize == n).collect();
    }
    let involutions: Vec<usize> = (0..n).filter(|&g| orders[g] == 2).collect();
    if n.is_power_of_two() && involutions.len() == 1 {
        return vec![0, involutions[0]];
    }
    vec![0]
}

fn record_for(
    name: &str,
    analysis: &GroupAnalysis<'_>,
    kind: GraphKind,
    failures: &mut Vec<String>,
) -> VerificationRecord {
    let group = analysis.group;
    let m = analysis.measure(kind);
    let applicable = analysis.is_applicable(kind);
    let prediction = analysis.predict(kind).ok();
    let mut record = VerificationRecord {
        name: name.to_string(),
        order: group.order(),
        kind,
        applicable,
        predicted: prediction.map(|p| p.value),
        reason: prediction.map(|p| p.reason),
        measured: m.diameter,
        nontrivial_components: m.components,
        isolated_count: m.star.isolated.len(),
        matched: false,
        witnesses: None,
    };
    let mut fail = |msg: String| failures.push(format!("{kind}: {msg}"));

    if applicable != prediction.is_some() {
        fail(format!("applicable = {applicable} but prediction is {prediction:?}"));
    }
    if !applicable {
        if m.star.isolated.len() != group.order() {
            fail(format!("expected an edgeless complement, {} vertices are not isolated", m.star.kept.len()));
        }
        return record;
    }

    if m.components != 1 {
        fail(format!("star has {} components", m.components));
    }
    if record.predicted.map(usize::from) != m.diameter {
        fail(format!("predicted {:?}, measured {:?}", record.predicted, m.diameter));
    }
    let expected_isolated: Vec<usize> = match kind {
        GraphKind::Power => expected_power_isolated(group),
        GraphKind::Enhanced => analysis.cyc.ones().collect(),
    };
    if m.star.isolated != expected_isolated {
        fail(format!("isolated set {:?}, expected {:?}", m.star.isolated, expected_isolated));
    }
    let predicted_witness = match prediction.and_then(|p| p.witness) {
        Some(Witness::Psi(w)) => {
            if let Err(e) = audit_psi(group, &w) {
                fail(format!("Psi witness audit failed: {e}"));
            }
            vec![w.element]
        }
        Some(Witness::Phi(w)) => {
            if let Err(e) = audit_phi(group, &w) {
                fail(format!("Phi witness audit failed: {e}"));
            }
            vec![w.x, w.y]
        }
        None => vec![],
    };
    record.witnesses = Some(RecordWitnesses {
        predicted: predicted_witness,
        farthest_pair: m.farthest_pair.map(|(u, v)| vec![u, v]).unwrap_or_default(),
    });
    record.matched = m.components == 1 && record.predicted.map(usize::from) == m.diameter;
    record
}

/// Power and enhanced records for one group; any failed check becomes a violation
/// that still carries both records.
pub fn verify_group(name: &str, group: &GroupTable) -> Result<[VerificationRecord; 2], TheoremViolation> {
    let analysis = GroupAnalysis::new(group);
    let mut failures = Vec::new();
    let power = record_for(name, &analysis, GraphKind::Power, &mut failures);
    let enhanced = record_for(name, &analysis, GraphKind::Enhanced, &mut failures);
    if failures.is_empty() {
        Ok([power, enhanced])
    } else {
        Err(TheoremViolation { name: name.to_string(), failures, records: vec![power, enhanced] })
    }
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub records: Vec<VerificationRecord>,
    pub violations: Vec<TheoremViolation>,
}

impl SweepReport {
    pub fn success(&self) -> bool {
        self.violations.is_empty() && self.records.iter().all(|r| !r.applicable || r.matched)
    }

    pub fn mismatches(&self) -> usize {
        self.records.iter().filter(|r| r.applicable && !r.matched).count()
    }

    pub fn to_jsonl(&self) -> String {
        records_to_jsonl(&self.records)
    }
}

fn map_entries<T: Send>(catalog: &[CatalogEntry], f: impl Fn(&CatalogEntry) -> T + Sync + Send) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        catalog.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        catalog.iter().map(f).collect()
    }
}

/// Verifies every catalog entry; records stay in catalog order.
pub fn sweep(catalog: &[CatalogEntry]) -> SweepReport {
    let results = map_entries(catalog, |e| verify_group(&e.name, &e.group));
    let mut report = SweepReport::default();
    for r in results {
        match r {
            Ok(recs) => report.records.extend(recs),
            Err(v) => {
                report.records.extend(v.records.iter().cloned());
                report.violations.push(v);
            }
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiHit {
    pub name: String,
    pub witness: PhiWitness,
    /// Measured diameter of the enhanced complement star; 3 when the hit is genuine.
    pub measured: Option<usize>,
}

/// Groups of the catalog admitting a Φ witness, each cross-checked by BFS.
pub fn search_phi(catalog: &[CatalogEntry]) -> Vec<PhiHit> {
    map_entries(catalog, |e| {
        let analysis = GroupAnalysis::new(&e.group);
        is_phi_group(&e.group, &analysis.family, &analysis.cyc).map(|witness| PhiHit {
            name: e.name.clone(),
            witness,
            measured: analysis.measure(GraphKind::Enhanced).diameter,
        })
    })
    .into_iter()
    .flatten()
    .collect()
}

pub fn records_to_jsonl(records: &[VerificationRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

pub fn parse_report(text: &str) -> Result<Vec<VerificationRecord>, serde_json::Error> {
    text.lines().filter(|l| !l.trim().is_empty()).map(serde_json::from_str).collect()
}

pub fn write_report(records: &[VerificationRecord], path: &Path) -> io::Result<()> {
    std::fs::write(path, records_to_jsonl(records))
}

pub fn read_report(path: &Path) -> io::Result<Vec<VerificationRecord>> {
    let text = std::fs::read_to_string(path)?;
    parse_report(&text).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, parse_group_expr};

    fn build(text: &str) -> GroupTable {
        build_group(&parse_group_expr(text).unwrap()).unwrap()
    }

    #[test]
    fn z12_power_record() {
        let [power, _] = verify_group("Z12", &build("cyclic:12")).unwrap();
        assert_eq!((power.predicted, power.measured, power.matched), (Some(3), Some(3), true));
    }

    #[test]
    fn q8_records() {
        let [power, enhanced] = verify_group("Q8", &build("quaternion:8")).unwrap();
        assert_eq!((power.predicted, power.measured), (Some(2), Some(2)));
        assert_eq!((enhanced.predicted, enhanced.measured), (Some(2), Some(2)));
        assert_eq!(power.isolated_count, 2);
    }

    #[test]
    fn z30_power_record() {
        let [power, enhanced] = verify_group("Z30", &build("cyclic:30")).unwrap();
        assert_eq!((power.predicted, power.measured), (Some(2), Some(2)));
        assert!(!enhanced.applicable);
        assert!(!enhanced.matched);
        assert_eq!(enhanced.isolated_count, 30);
    }

    #[test]
    fn sweep_of_cyclic_p_groups_is_inapplicable() {
        let spec = CatalogSpec::only_extra(
            ["cyclic:4", "cyclic:8", "cyclic:9", "cyclic:25"].map(|s| parse_group_expr(s).unwrap()).to_vec(),
        );
        let report = sweep(&build_catalog(&spec).unwrap());
        assert_eq!(report.records.len(), 8);
        assert!(report.records.iter().all(|r| !r.applicable));
        assert!(report.success());
    }

    #[test]
    fn sweep_single_s3() {
        let spec = CatalogSpec::only_extra(vec![parse_group_expr("symmetric:3").unwrap()]);
        let report = sweep(&build_catalog(&spec).unwrap());
        assert_eq!(report.records.len(), 2);
        assert!(report.records.iter().all(|r| r.matched));
        assert!(report.success());
    }

    #[test]
    fn search_phi_on_p_groups_is_empty() {
        let spec = CatalogSpec {
            max_order: 64,
            ..CatalogSpec::only_abelian(64)
        };
        let catalog: Vec<_> = build_catalog(&spec)
            .unwrap()
            .into_iter()
            .filter(|e| crate::factor::factorize(e.group.order() as u64).len() == 1)
            .collect();
        assert!(search_phi(&catalog).is_empty());
    }

    #[test]
    fn report_round_trip() {
        let [a, b] = verify_group("S3", &build("symmetric:3")).unwrap();
        let records = vec![a, b];
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.jsonl");
        write_report(&records, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.ends_with('\n'));
        assert_eq!(read_report(&path).unwrap(), records);

        write_report(&[], &path).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "");
    }

    #[test]
    fn record_key_order() {
        let [a, _] = verify_group("S3", &build("symmetric:3")).unwrap();
        let line = serde_json::to_string(&a).unwrap();
        let keys = [
            "name", "order", "kind", "applicable", "predicted", "reason", "measured",
            "nontrivial_components", "isolated_count", "match",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| line.find(&format!("\"{k}\":")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{line}");
    }
}
