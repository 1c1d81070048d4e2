use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Every verifiable statement. The first block mirrors the labelled
/// displays; `Jackson` and `BaseDE` cover the summation formula and the
/// two `c = 1` simplifications, and the last five are the p-adic
/// corollaries and classical congruences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatementId {
    VanhammeQPartial,
    WeiA,
    WeiB,
    BachraouiDouble,
    Relations,
    ThmA,
    ThmAa,
    ThmC,
    ThmD,
    LemmaA,
    LemmaB,
    BaseA,
    BaseB,
    BaseC,
    WeiBb,
    WeiCc,
    WeiDd,
    WeiEe,
    WeiEf,
    WeiFf,
    WeiBbb,
    WeiCcc,
    WeiDdd,
    WeiEee,
    WeiFff,
    WeiGgg,
    WeiGg,
    WeiHhh,
    Limit2Dim,
    Limit3Dim,
    FinalReduction,
    Jackson,
    BaseDE,
    CorA,
    CorAa,
    Harmonic,
    VanhammeD2,
    LongRamakrishna,
}

use StatementId::*;

const NAMES: [(StatementId, &str); 38] = [
    (VanhammeQPartial, "vanhamme-q-partial"),
    (WeiA, "wei-a"),
    (WeiB, "wei-b"),
    (BachraouiDouble, "bachraoui-double"),
    (Relations, "relations"),
    (ThmA, "thm-a"),
    (ThmAa, "thm-aa"),
    (ThmC, "thm-c"),
    (ThmD, "thm-d"),
    (LemmaA, "lemma-a"),
    (LemmaB, "lemma-b"),
    (BaseA, "base-A"),
    (BaseB, "base-B"),
    (BaseC, "base-C"),
    (WeiBb, "wei-bb"),
    (WeiCc, "wei-cc"),
    (WeiDd, "wei-dd"),
    (WeiEe, "wei-ee"),
    (WeiEf, "wei-ef"),
    (WeiFf, "wei-ff"),
    (WeiBbb, "wei-bbb"),
    (WeiCcc, "wei-ccc"),
    (WeiDdd, "wei-ddd"),
    (WeiEee, "wei-eee"),
    (WeiFff, "wei-fff"),
    (WeiGgg, "wei-ggg"),
    (WeiGg, "wei-gg"),
    (WeiHhh, "wei-hhh"),
    (Limit2Dim, "limit-2dim"),
    (Limit3Dim, "limit-3dim"),
    (FinalReduction, "final-reduction"),
    (Jackson, "jackson"),
    (BaseDE, "base-DE"),
    (CorA, "cor-a"),
    (CorAa, "cor-aa"),
    (Harmonic, "harmonic"),
    (VanhammeD2, "vanhamme-D2"),
    (LongRamakrishna, "long-ramakrishna"),
];

impl StatementId {
    pub const ALL: [StatementId; 38] = {
        let mut out = [VanhammeQPartial; 38];
        let mut i = 0;
        while i < 38 {
            out[i] = NAMES[i].0;
            i += 1;
        }
        out
    };

    pub fn as_str(self) -> &'static str {
        NAMES.iter().find(|(id, _)| *id == self).map(|(_, s)| *s).expect("every id is named")
    }

    /// Statements checked in `Z/p^N` rather than in `Q[q]`.
    pub fn is_padic(self) -> bool {
        matches!(self, CorA | CorAa | Harmonic | VanhammeD2 | LongRamakrishna)
    }

    /// The proof-chain congruences for the three-parameter series.
    pub fn is_chain(self) -> bool {
        matches!(
            self,
            WeiBb | WeiCc | WeiDd | WeiEe | WeiEf | WeiFf | WeiBbb | WeiCcc | WeiDdd | WeiEee | WeiFff | WeiGgg
        )
    }

    /// Simplex dimension of a chain statement.
    pub fn dim(self) -> u32 {
        match self {
            WeiBbb | WeiCcc | WeiDdd | WeiEee | WeiFff | WeiGgg | WeiHhh | ThmD | ThmAa | Limit3Dim | CorAa => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        NAMES
            .iter()
            .find(|(_, name)| *name == s)
            .map(|(id, _)| *id)
            .ok_or_else(|| Error::Precondition(format!("unknown statement id {s:?}")))
    }
}

/// Outcome of one exact check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Check {
    pub ok: bool,
    /// Degree of the modulus; 0 for identities.
    pub modulus_degree: usize,
}

impl Check {
    pub fn identity(ok: bool) -> Self {
        Check { ok, modulus_degree: 0 }
    }

    pub fn modulo(ok: bool, modulus_degree: usize) -> Self {
        Check { ok, modulus_degree }
    }

    /// Both checks hold; reports the larger modulus.
    pub fn and(self, other: Check) -> Check {
        Check {
            ok: self.ok && other.ok,
            modulus_degree: self.modulus_degree.max(other.modulus_degree),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub statement: StatementId,
    /// Rendered inputs, e.g. `n=4 a=2 b=3 seed=42`.
    pub parameters: String,
    pub modulus_degree: usize,
    pub ok: bool,
    pub elapsed_ms: u64,
}
