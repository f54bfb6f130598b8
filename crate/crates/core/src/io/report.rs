//! Structural summaries and their JSON form.

use serde::Serialize;

use crate::algebra::EffectAlgebra;
use crate::laws::{LawReport, LawStatus};
use crate::limits::Limits;
use crate::topo::{frink_ideal_topology, interval_topology, order_topology, Topology};

/// Structural flags; `None` when the value could not be computed (not a
/// lattice, or a size guard was hit).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub lattice: bool,
    pub distributive: Option<bool>,
    pub atomic: bool,
    pub mv: Option<bool>,
    pub o_continuous: Option<bool>,
    pub algebraic: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TopologySummary {
    pub open_count: Option<u64>,
    pub hausdorff: bool,
    pub discrete: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Topologies {
    pub interval: Option<TopologySummary>,
    pub order: Option<TopologySummary>,
    pub frink: Option<TopologySummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
struct LawJson<'a> {
    id: &'a str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
}

/// Flags and topology summaries of one instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Analysis {
    pub instance: String,
    pub flags: Flags,
    pub topologies: Topologies,
}

fn summarize(t: crate::Result<Topology>, limits: &Limits) -> Option<TopologySummary> {
    t.ok().map(|t| TopologySummary {
        open_count: t.open_count(limits),
        hausdorff: t.is_hausdorff(),
        discrete: t.is_discrete(),
    })
}

pub fn analyze(e: &EffectAlgebra, limits: &Limits) -> Analysis {
    let lattice = e.is_lattice();
    Analysis {
        instance: e.name().to_string(),
        flags: Flags {
            lattice,
            distributive: e.is_distributive().ok(),
            atomic: e.is_atomic(),
            mv: e.is_mv().ok(),
            o_continuous: e.is_o_continuous(limits).ok(),
            algebraic: e.is_algebraic(limits).ok(),
        },
        topologies: if lattice {
            Topologies {
                interval: summarize(interval_topology(e), limits),
                order: summarize(order_topology(e, limits), limits),
                frink: summarize(frink_ideal_topology(e), limits),
            }
        } else {
            Topologies::default()
        },
    }
}

#[derive(Serialize)]
struct Document<'a> {
    instance: &'a str,
    flags: &'a Flags,
    topologies: &'a Topologies,
    laws: Vec<LawJson<'a>>,
}

/// The report document: `{instance, flags, topologies, laws}` with a fixed
/// key order and a trailing newline. Timings are not included, so equal
/// inputs give identical bytes.
pub fn report_json(analysis: &Analysis, laws: Option<&LawReport>) -> String {
    let laws = laws
        .map(|r| {
            r.entries
                .iter()
                .map(|entry| {
                    let (witness, reason) = match &entry.status {
                        LawStatus::Pass => (None, None),
                        LawStatus::Fail { witness } => (Some(witness.as_str()), None),
                        LawStatus::Skipped { reason } => (None, Some(reason.as_str())),
                    };
                    LawJson {
                        id: entry.id,
                        status: entry.status.label(),
                        witness,
                        reason,
                    }
                })
                .collect()
        })
        .unwrap_or_default();
    let doc = Document {
        instance: &analysis.instance,
        flags: &analysis.flags,
        topologies: &analysis.topologies,
        laws,
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;
    use crate::laws::run_all;

    fn json(e: &EffectAlgebra) -> serde_json::Value {
        let a = analyze(e, &Limits::DEFAULT);
        let r = run_all(e, &Limits::DEFAULT);
        serde_json::from_str(&report_json(&a, Some(&r))).unwrap()
    }

    #[test]
    fn chain_report() {
        let v = json(&chain(4));
        assert_eq!(v["flags"]["distributive"], true);
        assert_eq!(v["topologies"]["order"]["open_count"], 32);
        let laws = v["laws"].as_array().unwrap();
        assert_eq!(laws.len(), 22);
        assert!(laws.iter().all(|l| l["status"] != "fail"));
    }

    #[test]
    fn mo2_report() {
        let v = json(&mo2());
        assert_eq!(v["flags"]["distributive"], false);
        let thm = v["laws"].as_array().unwrap().iter().find(|l| l["id"] == "Thm3.1").unwrap();
        assert_eq!(thm["status"], "skipped");
        assert!(thm.get("witness").is_none());
    }

    #[test]
    fn key_order_and_empty_laws() {
        let text = report_json(&Analysis::default(), None);
        let keys: Vec<usize> = ["\"instance\"", "\"flags\"", "\"topologies\"", "\"laws\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["laws"], serde_json::json!([]));
        let flag_keys = ["lattice", "distributive", "atomic", "mv", "o_continuous", "algebraic"];
        let mut last = 0;
        for k in flag_keys {
            let at = text.find(&format!("\"{k}\"")).unwrap();
            assert!(at > last);
            last = at;
        }
    }

    #[test]
    fn byte_deterministic() {
        let once = |e: &EffectAlgebra| {
            report_json(&analyze(e, &Limits::DEFAULT), Some(&run_all(e, &Limits::DEFAULT)))
        };
        for e in [b3(), mo2()] {
            assert_eq!(once(&e), once(&e));
        }
    }
}
