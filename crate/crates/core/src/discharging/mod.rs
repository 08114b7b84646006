//! Discharging for maximum degree seven: initial charge `d(x) - 6`, five
//! redistribution rules, and the per-vertex case bounds.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::{rational_string, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DischargeError {
    #[error("maximum degree is {0}, the discharging argument needs 7")]
    MaxDegree(usize),
}

/// Membership in the three special vertex classes.
///
/// * `A`: 7-vertices with a 2-neighbor.
/// * `B`: 6-vertices with a 3-neighbor.
/// * `C`: 7-vertices with a 3-neighbor and at least one further
///   5⁻-neighbor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClassification {
    pub a: Vec<bool>,
    pub b: Vec<bool>,
    pub c: Vec<bool>,
    /// `d_{5^-}(v)` for every vertex.
    pub d5_minus: Vec<usize>,
    /// Set when Δ is not 7; the classes are still computed.
    pub delta_warning: Option<usize>,
}

impl VertexClassification {
    /// `|N(v) ∩ A| + |N(v) ∩ B| + |N(v) ∩ C|`, a vertex in two classes
    /// counted twice.
    pub fn special_neighbor_count(&self, g: &Graph, v: Vertex) -> usize {
        g.neighbors(v)
            .iter()
            .map(|&w| self.a[w] as usize + self.b[w] as usize + self.c[w] as usize)
            .sum()
    }

    pub fn is_special(&self, v: Vertex) -> bool {
        self.a[v] || self.b[v] || self.c[v]
    }
}

pub fn classify_abc(g: &Graph) -> VertexClassification {
    let has = |v: Vertex, d: usize| g.neighbors(v).iter().any(|&w| g.deg(w) == d);
    let d5_minus: Vec<usize> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().filter(|&&w| g.deg(w) <= 5).count())
        .collect();
    let a = g.vertices().map(|v| g.deg(v) == 7 && has(v, 2)).collect();
    let b = g.vertices().map(|v| g.deg(v) == 6 && has(v, 3)).collect();
    let c = g
        .vertices()
        .map(|v| g.deg(v) == 7 && has(v, 3) && d5_minus[v] >= 2)
        .collect();
    let delta = g.max_degree();
    VertexClassification {
        a,
        b,
        c,
        d5_minus,
        delta_warning: (delta != 7).then_some(delta),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transfer {
    pub from: Vertex,
    pub to: Vertex,
    pub amount: Rational,
    pub rule: Rule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeLedger {
    pub initial: Vec<Rational>,
    pub fin: Vec<Rational>,
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    pub fn total_initial(&self) -> Rational {
        self.initial.iter().sum()
    }

    pub fn total_final(&self) -> Rational {
        self.fin.iter().sum()
    }

    pub fn conserves_charge(&self) -> bool {
        self.total_initial() == self.total_final()
    }
}

/// The amount a single rule moves from `from` to `to`, recomputed from
/// scratch; `None` when the rule does not fire on that pair.
pub fn rule_amount(g: &Graph, cls: &VertexClassification, rule: Rule, from: Vertex, to: Vertex) -> Option<Rational> {
    if !g.has_edge(from, to) {
        return None;
    }
    let (df, dt) = (g.deg(from), g.deg(to));
    let int = |k: i64| Some(Rational::from_integer(k));
    match rule {
        Rule::R1 => {
            let count = cls.special_neighbor_count(g, from);
            (df == 7 && cls.d5_minus[from] == 0 && count > 0 && cls.is_special(to))
                .then(|| Rational::new(1, count as i64))
        }
        Rule::R2 if df == 7 && cls.d5_minus[from] > 0 => match dt {
            4 | 5 => Some(Rational::new(1, cls.d5_minus[from] as i64)),
            3 => int(1),
            2 => int(2),
            _ => None,
        },
        Rule::R3 if df == 6 && dt == 3 => int(1),
        Rule::R4 if df == 5 && dt == 7 && cls.c[to] => Some(Rational::new(1, 8)),
        Rule::R5 if df == 5 && dt == 4 => Some(Rational::new(1, 2)),
        _ => None,
    }
}

const RULES: [Rule; 5] = [Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5];

/// Applies R1–R5 once each wherever they fire. Transfers are logged in
/// rule order, then by sender, then by receiver.
pub fn apply_rules(g: &Graph, cls: &VertexClassification) -> ChargeLedger {
    let initial: Vec<Rational> = g
        .vertices()
        .map(|v| Rational::from_integer(g.deg(v) as i64 - 6))
        .collect();
    let mut fin = initial.clone();
    let mut transfers = Vec::new();
    for rule in RULES {
        for from in g.vertices() {
            for &to in g.neighbors(from) {
                if let Some(amount) = rule_amount(g, cls, rule, from, to) {
                    fin[from] -= amount;
                    fin[to] += amount;
                    transfers.push(Transfer { from, to, amount, rule });
                }
            }
        }
    }
    debug_assert!(g.vertices().all(|v| {
        let sends = |r| transfers.iter().any(|t| t.from == v && t.rule == r);
        [sends(Rule::R1), sends(Rule::R2), sends(Rule::R3)]
            .iter()
            .filter(|&&s| s)
            .count()
            <= 1
    }));
    ChargeLedger {
        initial,
        fin,
        transfers,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    I,
    II,
    III,
    IV,
    V,
    VI,
    Exempt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Exactly(Rational),
    AtLeast(Rational),
    Above(Rational),
    None,
}

impl Bound {
    pub fn holds(&self, x: Rational) -> bool {
        match *self {
            Bound::Exactly(b) => x == b,
            Bound::AtLeast(b) => x >= b,
            Bound::Above(b) => x > b,
            Bound::None => true,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Exactly(b) => write!(f, "= {}", rational_string(b)),
            Bound::AtLeast(b) => write!(f, ">= {}", rational_string(b)),
            Bound::Above(b) => write!(f, "> {}", rational_string(b)),
            Bound::None => f.write_str("none"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseVerdict {
    pub vertex: Vertex,
    pub case: Case,
    pub bound: Bound,
    pub charge: Rational,
    pub met: bool,
}

/// Case label and asserted bound for `v`.
///
/// (I) 2- and 3-vertices, exactly 0. (II) an edge `uv` with
/// `d(u) + d(v) = 9` and `3 <= d(u) <= d(v) < 7`: at least 0 for the
/// smaller end, at least 1 for the larger. (III) 4-vertices with four
/// 6⁺-neighbors: at least 0 when they have four 7-neighbors or two of each,
/// otherwise positive. (IV) 5-vertices with five 5⁺-neighbors: positive.
/// (V) 6-vertices with six 4⁺-neighbors: exactly 0. (VI) 7-vertices: at
/// least 0. Everything else is exempt.
pub fn case_of(g: &Graph, v: Vertex) -> (Case, Bound) {
    let zero = Rational::zero();
    let d = g.deg(v);
    let nd = |p: &dyn Fn(usize) -> bool| g.neighbors(v).iter().filter(|&&w| p(g.deg(w))).count();
    if d == 2 || d == 3 {
        return (Case::I, Bound::Exactly(zero));
    }
    if (4..=6).contains(&d) {
        let partner = 9 - d;
        if partner >= 3 && nd(&|x| x == partner) > 0 {
            let bound = if d < partner { zero } else { Rational::from_integer(1) };
            return (Case::II, Bound::AtLeast(bound));
        }
    }
    match d {
        4 if nd(&|x| x >= 6) == 4 => {
            let (d6, d7) = (nd(&|x| x == 6), nd(&|x| x == 7));
            if d7 == 4 || (d6 == 2 && d7 == 2) {
                (Case::III, Bound::AtLeast(zero))
            } else {
                (Case::III, Bound::Above(zero))
            }
        }
        5 if nd(&|x| x >= 5) == 5 => (Case::IV, Bound::Above(zero)),
        6 if nd(&|x| x >= 4) == 6 => (Case::V, Bound::Exactly(zero)),
        7 => (Case::VI, Bound::AtLeast(zero)),
        _ => (Case::Exempt, Bound::None),
    }
}

pub fn verify_cases(g: &Graph, ledger: &ChargeLedger) -> Vec<CaseVerdict> {
    g.vertices()
        .map(|v| {
            let (case, bound) = case_of(g, v);
            let charge = ledger.fin[v];
            CaseVerdict {
                vertex: v,
                case,
                bound,
                charge,
                met: bound.holds(charge),
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AverageDegreeVerdict {
    pub average: Rational,
    pub total_final: Rational,
    /// `Σ M' >= 0`, equivalently average degree at least 6.
    pub at_least_six: bool,
    /// Average degree exactly 6.
    pub tight: bool,
    pub every_charge_nonnegative: bool,
}

pub fn average_degree_verdict(g: &Graph, ledger: &ChargeLedger) -> Result<AverageDegreeVerdict, DischargeError> {
    let delta = g.max_degree();
    if delta != 7 {
        return Err(DischargeError::MaxDegree(delta));
    }
    let average = Rational::new(2 * g.m() as i64, g.n() as i64);
    let total_final = ledger.total_final();
    Ok(AverageDegreeVerdict {
        average,
        total_final,
        at_least_six: !total_final.is_negative(),
        tight: total_final.is_zero(),
        every_charge_nonnegative: ledger.fin.iter().all(|c| !c.is_negative()),
    })
}

#[derive(Serialize)]
struct TransferJson {
    from: Vertex,
    to: Vertex,
    amount: String,
    rule: Rule,
}

#[derive(Serialize)]
struct VertexJson {
    vertex: Vertex,
    degree: usize,
    #[serde(rename = "M")]
    m: String,
    #[serde(rename = "M'")]
    m_prime: String,
    case: Case,
    bound: String,
    bound_met: bool,
    transfers: Vec<TransferJson>,
}

/// Per-vertex `{degree, M, M', case, transfers}`; a vertex lists the
/// transfers it sends and receives.
pub fn ledger_json(g: &Graph, ledger: &ChargeLedger, cases: &[CaseVerdict]) -> serde_json::Value {
    let vertices: Vec<VertexJson> = g
        .vertices()
        .map(|v| VertexJson {
            vertex: v,
            degree: g.deg(v),
            m: rational_string(&ledger.initial[v]),
            m_prime: rational_string(&ledger.fin[v]),
            case: cases[v].case,
            bound: cases[v].bound.to_string(),
            bound_met: cases[v].met,
            transfers: ledger
                .transfers
                .iter()
                .filter(|t| t.from == v || t.to == v)
                .map(|t| TransferJson {
                    from: t.from,
                    to: t.to,
                    amount: rational_string(&t.amount),
                    rule: t.rule,
                })
                .collect(),
        })
        .collect();
    serde_json::json!({
        "vertices": vertices,
        "total_M": rational_string(&ledger.total_initial()),
        "total_M'": rational_string(&ledger.total_final()),
    })
}
