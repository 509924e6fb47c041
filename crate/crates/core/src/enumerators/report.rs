use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified identity: its name, parameters, both sides and the verdict.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub params: Value,
    pub status: Status,
    pub lhs: Value,
    pub rhs: Value,
}

impl CheckRecord {
    pub fn new<L: Serialize, R: Serialize>(check: &str, params: Value, pass: bool, lhs: &L, rhs: &R) -> Self {
        Self {
            check: check.to_string(),
            params,
            status: if pass { Status::Pass } else { Status::Fail },
            lhs: serde_json::to_value(lhs).expect("serializable"),
            rhs: serde_json::to_value(rhs).expect("serializable"),
        }
    }

    /// Both sides compared for equality.
    pub fn equal<T: Serialize + PartialEq>(check: &str, params: Value, lhs: &T, rhs: &T) -> Self {
        Self::new(check, params, lhs == rhs, lhs, rhs)
    }

    /// A check that could not be evaluated.
    pub fn error(check: &str, params: Value, err: &Error) -> Self {
        Self::new(check, params, false, &Value::Null, &err.to_string())
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckRecord {
    /// `PASS check {params}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} {}", self.check, self.params)
    }
}

/// Named groups of checks run by `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Oracle,
    PowerSum,
    F,
    QExp,
    Roots,
    Unimodal,
    Counting,
    EPositivity,
    Series,
    Transfer,
}

impl Suite {
    /// Every concrete suite, in report order.
    pub const MEMBERS: [Suite; 10] = [
        Suite::Oracle,
        Suite::EPositivity,
        Suite::PowerSum,
        Suite::F,
        Suite::Counting,
        Suite::QExp,
        Suite::Roots,
        Suite::Transfer,
        Suite::Unimodal,
        Suite::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Oracle => "oracle",
            Suite::PowerSum => "powersum",
            Suite::F => "f",
            Suite::QExp => "qexp",
            Suite::Roots => "roots",
            Suite::Unimodal => "unimodal",
            Suite::Counting => "counting",
            Suite::EPositivity => "epos",
            Suite::Series => "series",
            Suite::Transfer => "transfer",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::MEMBERS)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

/// Bounds for the verification suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest `n` for brute-force word and coloring enumeration.
    pub max_n: usize,
    /// Largest `z`-order (and `n` for closed forms and permutation sums).
    pub max_order: usize,
    /// Variables for table comparisons; defaults to `max_n`.
    pub vars: Option<usize>,
    /// Largest alphabet size in the counting identities.
    pub max_m: usize,
    /// Largest matrix size in the determinant identity.
    pub max_k: usize,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_n: 5,
            max_order: 8,
            vars: None,
            max_m: 5,
            max_k: 5,
            threads: None,
        }
    }
}

impl VerifyConfig {
    pub fn vars(&self) -> usize {
        self.vars.unwrap_or(self.max_n)
    }

    pub fn validate(&self) -> Result<()> {
        let check = |param: &'static str, value: usize, lo: usize, hi: usize| {
            if (lo..=hi).contains(&value) {
                Ok(())
            } else {
                Err(Error::invalid(param, format!("{value} is outside {lo}..={hi}")))
            }
        };
        check("max-n", self.max_n, 1, 8)?;
        check("max-order", self.max_order, 1, 8)?;
        check("vars", self.vars(), 1, 8)?;
        check("max-m", self.max_m, 1, 8)?;
        check("max-k", self.max_k, 2, 6)?;
        if let Some(t) = self.threads {
            check("threads", t, 1, 1024)?;
        }
        Ok(())
    }
}

/// Records of one run; passes iff every record passes.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.records).expect("serializable")
    }

    /// One line per record plus a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{} checks, {} passed, {} failed\n",
            self.records.len(),
            self.records.len() - failed,
            failed
        ));
        out
    }
}
