//! Verification suites: each check compares two exactly computed values (or counts
//! failures over seeded random samples) and records the outcome in a [`Report`].

mod algebra;
mod bernoulli;
mod cocycle;
mod genera;
mod local_index;
mod report;
mod trace;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::AlgebraContext;
use crate::error::{Error, Result};

pub use report::{Check, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Bernoulli,
    Algebra,
    Trace,
    Cocycle,
    LocalIndex,
    Genera,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 6] = [
        Suite::Bernoulli,
        Suite::Algebra,
        Suite::Trace,
        Suite::Cocycle,
        Suite::LocalIndex,
        Suite::Genera,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bernoulli => "bernoulli",
            Suite::Algebra => "algebra",
            Suite::Trace => "trace",
            Suite::Cocycle => "cocycle",
            Suite::LocalIndex => "local-index",
            Suite::Genera => "genera",
            Suite::All => "all",
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
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// A type `(2n|a,b)`, written on the command line as `2n,a,b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeSpec {
    pub n: usize,
    pub a: usize,
    pub b: usize,
}

impl TypeSpec {
    pub fn new(n: usize, a: usize, b: usize) -> Self {
        TypeSpec { n, a, b }
    }

    pub fn context(self) -> Result<AlgebraContext> {
        AlgebraContext::new(self.n, self.a, self.b)
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{},{})", 2 * self.n, self.a, self.b)
    }
}

impl FromStr for TypeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [dim, a, b] = parts[..] else {
            return Err(Error::Parse(format!("expected 2n,a,b, got {s:?}")));
        };
        let num = |x: &str| {
            x.parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a natural number: {x:?}")))
        };
        let (dim, a, b) = (num(dim)?, num(a)?, num(b)?);
        if dim % 2 == 1 {
            return Err(Error::InvalidContext(format!("dimension {dim} is odd")));
        }
        let spec = TypeSpec::new(dim / 2, a, b);
        spec.context()?;
        Ok(spec)
    }
}

/// What to run: an optional single type, an optional local-index degree, the seed
/// and an optional sample count overriding each suite's default.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunConfig {
    pub kind: Option<TypeSpec>,
    pub degree: Option<usize>,
    pub seed: u64,
    pub samples: Option<usize>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if let Some(kind) = self.kind {
            kind.context()?;
        }
        if let Some(d) = self.degree {
            if d > crate::local_index::MAX_GRAPHSUM {
                return Err(Error::BoundExceeded(format!(
                    "degree {d} exceeds the graph-sum bound {}",
                    crate::local_index::MAX_GRAPHSUM
                )));
            }
        }
        if self.samples == Some(0) {
            return Err(Error::InvalidArgument("samples must be positive".into()));
        }
        Ok(())
    }

    fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    fn types_or(&self, defaults: &[(usize, usize, usize)]) -> Vec<TypeSpec> {
        match self.kind {
            Some(k) => vec![k],
            None => defaults.iter().map(|&(n, a, b)| TypeSpec::new(n, a, b)).collect(),
        }
    }

    /// An independent random stream per check, so results do not depend on
    /// scheduling.
    fn rng(&self, stream: &str) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(fnv1a(stream.as_bytes()));
        rng
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Runs a suite and returns its report, checks sorted by id.
pub fn run(suite: Suite, cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::INDIVIDUAL.to_vec(),
        s => vec![s],
    };
    let parts = suites
        .par_iter()
        .map(|&s| match s {
            Suite::Bernoulli => bernoulli::run(cfg),
            Suite::Algebra => algebra::run(cfg),
            Suite::Trace => trace::run(cfg),
            Suite::Cocycle => cocycle::run(cfg),
            Suite::LocalIndex => local_index::run(cfg),
            Suite::Genera => genera::run(cfg),
            Suite::All => unreachable!("expanded above"),
        })
        .collect::<Result<Vec<Vec<Check>>>>()?;
    Ok(Report::new(suite, cfg, parts.into_iter().flatten().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_type() {
        assert_eq!("4,1,1".parse::<TypeSpec>().unwrap(), TypeSpec::new(2, 1, 1));
        assert_eq!(TypeSpec::new(2, 1, 1).to_string(), "(4|1,1)");
        assert!(matches!("3,1,1".parse::<TypeSpec>(), Err(Error::InvalidContext(_))));
        assert!(matches!("2,2,1".parse::<TypeSpec>(), Err(Error::InvalidContext(_))));
        assert!(matches!("2,1".parse::<TypeSpec>(), Err(Error::Parse(_))));
    }

    #[test]
    fn parse_suite() {
        assert_eq!("local-index".parse::<Suite>().unwrap(), Suite::LocalIndex);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn streams_differ() {
        use rand::Rng;
        let cfg = RunConfig::default();
        let x: u64 = cfg.rng("a").gen();
        let y: u64 = cfg.rng("b").gen();
        assert_ne!(x, y);
        assert_eq!(x, cfg.rng("a").gen::<u64>());
    }
}
