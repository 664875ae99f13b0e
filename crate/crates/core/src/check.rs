//! Property suites run by the `check` command: every fast path compared with
//! the brute-force oracles on small inputs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gproduct::{Element, GraphProduct};
use crate::graph::{ComponentSpec, Graph, LetterId};
use crate::ihull::HullElement;
use crate::oracle::{self, OracleLclm, Projector};
use crate::ragroup::GroupOrZero;
use crate::word::SignedLetter;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    /// Longest generator word enumerated exhaustively.
    pub max_len: usize,
    /// Largest random graph used by graph-independent suites.
    pub max_vertices: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 1,
            max_len: 4,
            max_vertices: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    pub skipped: bool,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            cases: 0,
            failures: Vec::new(),
            skipped: false,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 10 {
            self.failures.push(detail());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs every suite on `gp`, plus the normal-form suite on random monogenic
/// graphs of up to `max_vertices` vertices.
pub fn run_all(gp: &GraphProduct, cfg: &CheckConfig) -> Vec<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    vec![
        normal_forms(gp, cfg.max_len),
        random_graph_normal_forms(&mut rng, cfg),
        cancellation(gp, &mut rng, cfg.max_len),
        final_components(gp, &mut rng, cfg.max_len),
        lclm(gp, cfg.max_len / 2),
        hclf(gp, cfg.max_len / 2),
        relations(gp),
        inverse_axioms(gp, cfg.max_len / 2),
        eta(gp, &mut rng, cfg.max_len),
    ]
}

fn alphabet(gp: &GraphProduct) -> usize {
    gp.spec().letters().len()
}

fn random_word(gp: &GraphProduct, rng: &mut ChaCha8Rng, max_len: usize) -> Vec<LetterId> {
    let n = alphabet(gp);
    if n == 0 {
        return Vec::new();
    }
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..n)).collect()
}

/// Canonical forms partition words exactly as the swap closure does.
pub fn normal_forms(gp: &GraphProduct, max_len: usize) -> SuiteResult {
    let mut r = SuiteResult::new("normal-form");
    let words = oracle::words_up_to(alphabet(gp), max_len);
    compare_partitions(gp, &words, &mut r);
    r
}

fn compare_partitions(gp: &GraphProduct, words: &[Vec<LetterId>], r: &mut SuiteResult) {
    use std::collections::HashMap;
    let mut class_of: HashMap<Vec<LetterId>, usize> = HashMap::new();
    let mut classes = 0;
    for w in words {
        if class_of.contains_key(w) {
            continue;
        }
        match oracle::trace_class(gp, w, oracle::DEFAULT_LIMIT) {
            Ok(class) => {
                for v in class {
                    class_of.insert(v, classes);
                }
                classes += 1;
            }
            Err(e) => r.check(false, || format!("oracle: {e}")),
        }
    }
    let mut by_nf: HashMap<Element, usize> = HashMap::new();
    let mut by_class: HashMap<usize, Element> = HashMap::new();
    for w in words {
        let nf = gp.from_letters(w);
        let class = class_of[w];
        let a = *by_nf.entry(nf.clone()).or_insert(class);
        let b = by_class.entry(class).or_insert_with(|| nf.clone()).clone();
        r.check(a == class && b == nf, || {
            format!("word {:?} has normal form {}", w, gp.format_element(&nf))
        });
    }
}

fn random_graph_normal_forms(rng: &mut ChaCha8Rng, cfg: &CheckConfig) -> SuiteResult {
    let mut r = SuiteResult::new("normal-form-random-graphs");
    for _ in 0..8 {
        let n = rng.gen_range(1..=cfg.max_vertices.max(1));
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let graph = Graph::new(names, edges).expect("generated graph is valid");
        let spec = ComponentSpec::monogenic(&graph);
        let gp = GraphProduct::new(graph, spec);
        let words: Vec<Vec<LetterId>> = (0..200).map(|_| random_word(&gp, rng, cfg.max_len + 2)).collect();
        compare_partitions(&gp, &words, &mut r);
    }
    r
}

/// `(a·c) ÷ c = a` on the right and `c \ (c·a) = a` on the left.
pub fn cancellation(gp: &GraphProduct, rng: &mut ChaCha8Rng, max_len: usize) -> SuiteResult {
    let mut r = SuiteResult::new("cancellation");
    for _ in 0..500 {
        let a = gp.from_letters(&random_word(gp, rng, max_len));
        let c = gp.from_letters(&random_word(gp, rng, max_len));
        let right = gp.right_divide(&gp.multiply(&a, &c), &c);
        r.check(right.as_ref() == Ok(&a), || {
            format!("({} {}) / {}", gp.format_element(&a), gp.format_element(&c), gp.format_element(&c))
        });
        let left = gp.left_divide(&gp.multiply(&c, &a), &c);
        r.check(left.as_ref() == Ok(&a), || {
            format!("{} \\ ({} {})", gp.format_element(&c), gp.format_element(&c), gp.format_element(&a))
        });
    }
    r
}

/// Final components do not depend on the reduced expression chosen.
pub fn final_components(gp: &GraphProduct, rng: &mut ChaCha8Rng, max_len: usize) -> SuiteResult {
    let mut r = SuiteResult::new("final-component");
    for _ in 0..100 {
        let a = gp.from_letters(&random_word(gp, rng, max_len + 2));
        let Ok(class) = oracle::shuffle_class(gp, a.syllables(), oracle::DEFAULT_LIMIT) else {
            r.check(false, || format!("shuffle class of {}", gp.format_element(&a)));
            continue;
        };
        let class: Vec<_> = class.into_iter().collect();
        for v in gp.graph().vertices() {
            let expected = gp.final_component(&a, v);
            for _ in 0..5 {
                let expr = class.choose(rng).expect("class is nonempty");
                let (d, rest) = gp.final_component_of(expr, v);
                let got = (d, gp.normal_form(rest));
                r.check(got == expected, || {
                    format!("final component at {} of {}", gp.graph().name(v), gp.format_element(&a))
                });
            }
        }
    }
    r
}

fn small_elements(gp: &GraphProduct, max_len: usize) -> Vec<(Vec<LetterId>, Element)> {
    let mut seen = std::collections::HashSet::new();
    oracle::words_up_to(alphabet(gp), max_len)
        .into_iter()
        .filter_map(|w| {
            let e = gp.from_letters(&w);
            seen.insert(e.clone()).then_some((w, e))
        })
        .collect()
}

fn same(proj: &Projector, gp: &GraphProduct, e: &Element, w: &[LetterId]) -> bool {
    proj.signature(&gp.letters_of(e.syllables())) == proj.signature(w)
}

/// `lclm` against exhaustive search of common left multiples.
pub fn lclm(gp: &GraphProduct, max_len: usize) -> SuiteResult {
    let mut r = SuiteResult::new("lclm");
    let proj = Projector::new(gp);
    let elems = small_elements(gp, max_len);
    for (bw, b) in &elems {
        for (cw, c) in &elems {
            let fast = gp.lclm(b, c);
            let slow = oracle::lclm_oracle(gp, bw, cw, bw.len() + cw.len());
            let ok = match (&fast, &slow) {
                (Err(_), Ok(OracleLclm::None)) => true,
                (Ok(l), Ok(OracleLclm::Principal(m))) => {
                    same(&proj, gp, &l.multiple, m)
                        && gp.multiply(&l.left, b) == l.multiple
                        && gp.multiply(&l.right, c) == l.multiple
                }
                _ => false,
            };
            r.check(ok, || format!("lclm({}, {})", gp.format_element(b), gp.format_element(c)));
        }
    }
    r
}

/// `hclf` and `max_above` against the join of all common left factors.
pub fn hclf(gp: &GraphProduct, max_len: usize) -> SuiteResult {
    let mut r = SuiteResult::new("hclf");
    let proj = Projector::new(gp);
    let elems = small_elements(gp, max_len);
    for (aw, a) in &elems {
        for (bw, b) in &elems {
            let ok = match oracle::hclf_oracle(gp, aw, bw) {
                Ok(Some(x)) => {
                    let h = gp.hclf(a, b);
                    let max = gp.max_above(&HullElement::Pair(a.clone(), b.clone()));
                    let c = oracle::left_divide_letters(gp, aw, &x).unwrap_or_default();
                    let d = oracle::left_divide_letters(gp, bw, &x).unwrap_or_default();
                    same(&proj, gp, &h, &x)
                        && matches!(&max, Ok(HullElement::Pair(mc, md))
                            if same(&proj, gp, mc, &c) && same(&proj, gp, md, &d))
                }
                _ => false,
            };
            r.check(ok, || format!("hclf({}, {})", gp.format_element(a), gp.format_element(b)));
        }
    }
    r
}

pub fn relations(gp: &GraphProduct) -> SuiteResult {
    let mut r = SuiteResult::new("relations");
    let report = gp.check_relations();
    r.cases = report.checked;
    for v in report.violations.iter().take(10) {
        r.failures.push(gp.format_relation(&v.relation));
    }
    r
}

fn small_hull(gp: &GraphProduct, max_len: usize) -> Vec<HullElement> {
    let elems: Vec<Element> = small_elements(gp, max_len).into_iter().map(|(_, e)| e).collect();
    let mut out = vec![HullElement::Zero];
    for a in &elems {
        for b in &elems {
            out.push(HullElement::Pair(a.clone(), b.clone()));
        }
    }
    out
}

/// Inverse-monoid axioms, idempotents and the natural order.
pub fn inverse_axioms(gp: &GraphProduct, max_len: usize) -> SuiteResult {
    let mut r = SuiteResult::new("inverse-axioms");
    let hull = small_hull(gp, max_len);
    let mul = |s: &HullElement, t: &HullElement| gp.hull_multiply(s, t);
    for s in &hull {
        let si = s.inverse();
        r.check(mul(&mul(s, &si), s) == *s, || format!("s s' s = s for {}", gp.format_hull(s)));
        r.check(si.inverse() == *s, || format!("s'' = s for {}", gp.format_hull(s)));
        r.check(s.is_idempotent() == (mul(s, s) == *s), || {
            format!("idempotent test for {}", gp.format_hull(s))
        });
    }
    for s in &hull {
        for t in &hull {
            let st = mul(s, t);
            r.check(st.inverse() == mul(&t.inverse(), &s.inverse()), || {
                format!("(st)' = t's' for {}, {}", gp.format_hull(s), gp.format_hull(t))
            });
            if s.is_idempotent() && t.is_idempotent() {
                r.check(st == mul(t, s), || {
                    format!("idempotents commute: {}, {}", gp.format_hull(s), gp.format_hull(t))
                });
            }
            let definitional = mul(&mul(s, &s.inverse()), t) == *s;
            r.check(gp.natural_le(s, t) == definitional, || {
                format!("natural order: {} <= {}", gp.format_hull(s), gp.format_hull(t))
            });
        }
    }
    r
}

/// `η` is 0-restricted, idempotent-pure and multiplicative on nonzero
/// products. Skipped when some component is free.
pub fn eta(gp: &GraphProduct, rng: &mut ChaCha8Rng, max_len: usize) -> SuiteResult {
    let mut r = SuiteResult::new("eta");
    if !gp.spec().all_mono() {
        r.skipped = true;
        return r;
    }
    let random_pair = |rng: &mut ChaCha8Rng| {
        HullElement::Pair(
            gp.from_letters(&random_word(gp, rng, max_len)),
            gp.from_letters(&random_word(gp, rng, max_len)),
        )
    };
    r.check(gp.eta(&HullElement::Zero) == Ok(GroupOrZero::Zero), || "eta(0)".into());
    let mut products = 0;
    while products < 500 {
        let s = random_pair(rng);
        let t = random_pair(rng);
        let Ok(GroupOrZero::Word(es)) = gp.eta(&s) else {
            r.check(false, || format!("eta({}) is zero", gp.format_hull(&s)));
            continue;
        };
        r.check(es.is_identity() == s.is_idempotent(), || {
            format!("idempotent-pure at {}", gp.format_hull(&s))
        });
        let st = gp.hull_multiply(&s, &t);
        if st.is_zero() {
            continue;
        }
        products += 1;
        let Ok(GroupOrZero::Word(et)) = gp.eta(&t) else {
            r.check(false, || format!("eta({}) is zero", gp.format_hull(&t)));
            continue;
        };
        let expected = gp.group_multiply(&es, &et).map(GroupOrZero::Word);
        r.check(gp.eta(&st) == expected, || {
            format!("eta multiplicative at {}, {}", gp.format_hull(&s), gp.format_hull(&t))
        });
    }
    let signed: Vec<SignedLetter> = (0..alphabet(gp)).map(SignedLetter::pos).collect();
    r.check(gp.group_reduce(&signed).is_ok(), || "group_reduce on generators".into());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_small_graphs() {
        let cfg = CheckConfig {
            seed: 7,
            max_len: 3,
            max_vertices: 3,
        };
        for text in [
            "vertex x mono",
            "vertex x1 mono\nvertex x2 mono\nvertex x3 mono\nedge x1 x2\nedge x2 x3",
            "vertex u free p q\nvertex w mono\nedge u w",
        ] {
            let gp = GraphProduct::parse(text).unwrap();
            for suite in run_all(&gp, &cfg) {
                assert!(suite.passed(), "{text}: {} {:?}", suite.name, suite.failures);
            }
        }
    }
}
