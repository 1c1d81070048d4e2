//! One entry point per statement: which inputs it takes, the small default
//! cases, and the call into its verifier.

use crate::congruence::{verify_base_de, verify_relations, ParamPoint};
use crate::error::{Error, Result};
use crate::exact::{BigRat, RatFun};
use crate::theorems::limits::verify_limit;
use crate::theorems::parametric::{
    verify_chain, verify_final_reduction, verify_lemma_b, verify_thm_a, verify_thm_aa, verify_thm_c, verify_thm_d,
    verify_wei_gg, verify_wei_hhh,
};
use crate::theorems::prior::verify_prior;
use crate::theorems::statement::{Check, StatementId};
use crate::theorems::summation::{verify_base_a, verify_base_bc, verify_jackson, verify_lemma_a, BaseWhich, JacksonParams};
use crate::qseries::TermSpec;

/// Which sampled parameters a statement consumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arity {
    /// Depends on `n` only; one trial suffices.
    None,
    A,
    AB,
    /// `a, b` and the exponent multiplier `t`.
    ABt,
    ABC,
    /// `a, b, c, d`; `e` is solved from the balancing condition.
    Jackson,
}

/// The inputs of one job. Fields a statement does not use are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub n: u32,
    pub point: ParamPoint,
    pub d: BigRat,
    pub t: u32,
}

impl StatementId {
    pub fn arity(self) -> Arity {
        use StatementId::*;
        match self {
            VanhammeQPartial | WeiA | WeiB | BachraouiDouble | ThmA | ThmAa | Limit2Dim | Limit3Dim
            | FinalReduction => Arity::None,
            WeiGg | WeiHhh => Arity::A,
            ThmC | ThmD | WeiFf | WeiGgg | BaseDE => Arity::AB,
            Relations => Arity::ABt,
            Jackson => Arity::Jackson,
            _ if self.is_padic() => Arity::None,
            _ => Arity::ABC,
        }
    }

    /// The `n` values exercised by `verify all --small`. For `jackson` these
    /// are numbers of terms; p-adic statements use primes instead.
    pub fn small_ns(self) -> &'static [u32] {
        use StatementId::*;
        match self {
            VanhammeQPartial => &[4, 5],
            WeiB => &[2, 5],
            BachraouiDouble => &[5, 7],
            ThmA => &[1, 4, 7],
            ThmAa => &[1, 4],
            Jackson => &[0, 1, 2, 3],
            WeiA | Relations | LemmaA | LemmaB | BaseA | Limit2Dim | Limit3Dim | FinalReduction | BaseDE => &[4, 7],
            _ if self.is_padic() => &[],
            _ => &[4],
        }
    }

    /// Validates `n` against the statement's hypotheses before any work.
    pub fn check_n(self, n: u32) -> Result<()> {
        use StatementId::*;
        let bad = |why: &str| Err(Error::Precondition(format!("{self}: n = {n} {why}")));
        if self.is_padic() {
            return Err(Error::Precondition(format!("{self} takes primes, not n")));
        }
        if n == 0 && self != Jackson {
            return bad("must be positive");
        }
        match self {
            Jackson | Relations | BaseDE | FinalReduction => Ok(()),
            VanhammeQPartial if n % 3 == 0 => bad("is divisible by 3"),
            VanhammeQPartial => Ok(()),
            WeiB if n % 3 != 2 => bad("is not 2 mod 3"),
            WeiB => Ok(()),
            BachraouiDouble if n % 2 == 0 || n % 3 == 0 => bad("is not coprime to 6"),
            BachraouiDouble => Ok(()),
            _ if n % 3 != 1 => bad("is not 1 mod 3"),
            _ => Ok(()),
        }
    }
}

/// The rendered inputs of a job.
pub fn describe(id: StatementId, inst: &Instance) -> String {
    let p = &inst.point;
    let n = inst.n;
    match id.arity() {
        Arity::None => match id {
            StatementId::WeiB => format!("n={n} M={}", (2 * n - 1) / 3),
            StatementId::Limit2Dim | StatementId::Limit3Dim => format!("n={n} exponent=3r-1"),
            _ => format!("n={n}"),
        },
        Arity::A => format!("n={n} a={}", p.a),
        Arity::AB => format!("n={n} a={} b={}", p.a, p.b),
        Arity::ABt => format!("n={n} t={} a={} b={}", inst.t, p.a, p.b),
        Arity::ABC => format!("n={n} {p}"),
        Arity::Jackson => format!("n_terms={n} a={} b={} c={} d={}", p.a, p.b, p.c, inst.d),
    }
}

/// Runs the verifier for a q-series statement.
pub fn verify_instance(id: StatementId, inst: &Instance) -> Result<Check> {
    use StatementId::*;
    let Instance { n, point: p, d, t } = inst;
    let n = *n;
    let flag = Check::identity;
    match id {
        VanhammeQPartial | WeiA | WeiB | BachraouiDouble => verify_prior(id, n),
        Relations => {
            let ok = verify_relations(&p.a, &p.b, *t, n)?;
            Ok(Check::modulo(ok, 2 * (*t * n) as usize))
        }
        ThmA => verify_thm_a(n),
        ThmAa => verify_thm_aa(n),
        ThmC => verify_thm_c(n, &p.a, &p.b),
        ThmD => verify_thm_d(n, &p.a, &p.b),
        LemmaA => {
            let spec = TermSpec::base_a(p.a.clone(), p.b.clone(), p.c.clone(), n);
            let lam = (0..n).map(|k| spec.term(k)).collect::<Result<Vec<RatFun>>>()?;
            Ok(flag(verify_lemma_a(3, 2, n, &lam)? && verify_lemma_a(3, 3, n, &lam)?))
        }
        LemmaB => verify_lemma_b(n, p),
        BaseA => verify_base_a(n, p),
        BaseB => verify_base_bc(n, p, BaseWhich::B),
        BaseC => verify_base_bc(n, p, BaseWhich::C),
        WeiGg => verify_wei_gg(n, &p.a),
        WeiHhh => verify_wei_hhh(n, &p.a),
        Limit2Dim => verify_limit(2, n),
        Limit3Dim => verify_limit(3, n),
        FinalReduction => verify_final_reduction(n),
        Jackson => {
            let params = JacksonParams::balanced(p.a.clone(), p.b.clone(), p.c.clone(), d.clone(), n)?;
            verify_jackson(&params)
        }
        BaseDE => Ok(Check::modulo(verify_base_de(&p.a, &p.b, n)?, 2 * n as usize)),
        _ if id.is_chain() => verify_chain(id, n, p),
        _ => Err(Error::Precondition(format!("{id} is checked in Z/p^N, not over Q[q]"))),
    }
}
