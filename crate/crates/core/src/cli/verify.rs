//! Self-check suites run by `btquot verify`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arithmetic::{chi, chi_symbolic, ArithmeticError, RamificationData};
use crate::building::Building;
use crate::exactnum::BigInteger;
use crate::qcombinatorics::{andrews_check, flag_count_oracle, flag_oracle_admits, vertex_degree};
use crate::simplicial::quotient_euler_check;
use crate::simplicial::random::random_admissible_case;

pub const SUITES: [&str; 5] = ["andrews", "degrees", "lemma21", "congruence", "integrality"];

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_suite(name: &str) -> Option<SuiteResult> {
    Some(match name {
        "andrews" => andrews(),
        "degrees" => degrees(),
        "lemma21" => quotient_euler(),
        "congruence" => congruence(),
        "integrality" => integrality(),
        _ => return None,
    })
}

fn andrews() -> SuiteResult {
    let mut r = SuiteResult::new("andrews");
    for n in 1..=10 {
        let ok = andrews_check(n).map(|rep| rep.equal).unwrap_or(false);
        r.check(ok, || format!("n = {n}"));
    }
    r
}

pub const DEGREE_CASES: [(usize, u32); 6] = [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (4, 2)];

fn degrees() -> SuiteResult {
    let mut r = SuiteResult::new("degrees");
    for (n, p) in DEGREE_CASES {
        let b = Building::new(n, p, n + 2).expect("guarded sizes");
        let v = b.standard_vertex();
        for i in 1..n {
            let count = b.simplices_at(&v, i).map(|s| s.len()).unwrap_or(0);
            let formula = vertex_degree(n as u32, i as u32)
                .expect("valid range")
                .eval_int(&BigInteger::from(p));
            let mut ok = BigInteger::from(count) == formula;
            if flag_oracle_admits(n as u32, p) {
                ok &= flag_count_oracle(n as u32, i as u32, p).ok() == Some(formula.clone());
            }
            r.check(ok, || {
                format!("n = {n}, p = {p}, i = {i}: {count} vs {formula}")
            });
        }
    }
    r
}

pub const QUOTIENT_SEED: u64 = 0x5eed_2101;

fn quotient_euler() -> SuiteResult {
    let mut r = SuiteResult::new("lemma21");
    let mut rng = ChaCha8Rng::seed_from_u64(QUOTIENT_SEED);
    for k in 0..200 {
        let case = random_admissible_case(&mut rng, 12, 40);
        let ok = quotient_euler_check(&case.complex, &case.action)
            .map(|rep| rep.equal)
            .unwrap_or(false);
        r.check(ok, || format!("case {k} ({})", case.group));
    }
    r
}

/// Every valid configuration with `n ∈ {2,3,5,7}`, `q ∈ {2,3,4,5}` and two to
/// four ramified places of degree at most 4.
pub fn sweep() -> Vec<RamificationData> {
    let mut out = Vec::new();
    for n in [2u32, 3, 5, 7] {
        for q in [2u64, 3, 4, 5] {
            for k in 2..=4 {
                for degrees in multisets(k, 4) {
                    let d = RamificationData::new(q, n, &degrees);
                    if crate::arithmetic::validate_data(&d).is_ok() {
                        out.push(d);
                    }
                }
            }
        }
    }
    out
}

/// Nondecreasing sequences of length `k` with entries in `1..=max`.
fn multisets(k: usize, max: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in multisets(k - 1, max) {
        let lo = rest.last().copied().unwrap_or(1);
        for d in lo..=max {
            let mut v = rest.clone();
            v.push(d);
            out.push(v);
        }
    }
    out
}

fn describe(d: &RamificationData) -> String {
    format!("n = {}, q = {}, degrees {:?}", d.n, d.q, d.degrees)
}

fn congruence() -> SuiteResult {
    let mut r = SuiteResult::new("congruence");
    for d in sweep() {
        let res = chi(&d);
        r.check(matches!(&res, Ok(rep) if rep.congruence_ok), || {
            format!("{}: {:?}", describe(&d), res.map(|rep| rep.chi))
        });
    }
    r
}

fn integrality() -> SuiteResult {
    let mut r = SuiteResult::new("integrality");
    for d in sweep() {
        let res: Result<bool, ArithmeticError> = (|| {
            let poly = chi_symbolic(d.n, &d.degrees)?;
            let value = chi(&d)?.chi;
            Ok(poly.eval_int(&BigInteger::from(d.q)) == value && poly.coeff(0) == 1.into())
        })();
        r.check(matches!(res, Ok(true)), || {
            format!("{}: {:?}", describe(&d), res)
        });
    }
    r
}
