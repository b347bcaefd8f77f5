//! Named, parameterized identity checks with JSON reports.
//!
//! Each registry entry states an identity, declares the parameters it
//! sweeps, and checks every instance in range exactly. A parameter that is
//! given pins the sweep to that value; a missing one runs over its default
//! desk-scale range.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::partitions::Partition;

mod checks;

/// Parameter names accepted by [`verify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    N,
    M,
    D,
    K,
    L,
    Lambda,
}

impl Param {
    pub fn as_str(self) -> &'static str {
        match self {
            Param::N => "n",
            Param::M => "m",
            Param::D => "d",
            Param::K => "k",
            Param::L => "l",
            Param::Lambda => "lambda",
        }
    }
}

impl std::fmt::Display for Param {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Partition>,
}

impl Params {
    fn get(&self, p: Param) -> Option<usize> {
        match p {
            Param::N => self.n,
            Param::M => self.m,
            Param::D => self.d,
            Param::K => self.k,
            Param::L => self.l,
            Param::Lambda => self.lambda.as_ref().map(Partition::size),
        }
    }

    fn given(&self) -> impl Iterator<Item = Param> + '_ {
        [
            Param::N,
            Param::M,
            Param::D,
            Param::K,
            Param::L,
            Param::Lambda,
        ]
        .into_iter()
        .filter(|&p| self.get(p).is_some())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Skipped,
}

/// One checked instance: both sides of the identity and whether they agree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Detail {
    pub instance: String,
    pub expected: Value,
    pub actual: Value,
    pub ok: bool,
}

impl Detail {
    pub fn new(instance: String, expected: impl Serialize, actual: impl Serialize) -> Self {
        let expected = serde_json::to_value(expected).expect("serializable");
        let actual = serde_json::to_value(actual).expect("serializable");
        let ok = expected == actual;
        Detail {
            instance,
            expected,
            actual,
            ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremCase {
    pub name: String,
    pub params: Params,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub details: Vec<Detail>,
}

impl TheoremCase {
    pub fn failures(&self) -> impl Iterator<Item = &Detail> {
        self.details.iter().filter(|d| !d.ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
    #[error("{param} = {value} is outside {lo}..={hi} for {name}")]
    ParamOutOfRange {
        name: String,
        param: Param,
        value: usize,
        lo: usize,
        hi: usize,
    },
    #[error("{name} does not take parameter {param}")]
    IrrelevantParam { name: String, param: Param },
}

/// A parameter's sweep range: `lo..=desk` by default, values up to `hard`
/// accepted when given explicitly.
#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub param: Param,
    pub lo: usize,
    pub desk: usize,
    pub hard: usize,
}

const fn spec(param: Param, lo: usize, desk: usize, hard: usize) -> ParamSpec {
    ParamSpec {
        param,
        lo,
        desk,
        hard,
    }
}

pub(crate) enum Outcome {
    Checked(Vec<Detail>),
    Skipped(String),
}

pub struct Theorem {
    pub name: &'static str,
    pub statement: &'static str,
    pub params: &'static [ParamSpec],
    run: fn(&Sweep) -> Outcome,
}

use Param::{Lambda, D, K, L, M, N};

const GL_PAIR: &[ParamSpec] = &[spec(M, 1, 3, 6), spec(N, 1, 3, 6), spec(D, 0, 5, 10)];
const GELFAND: &[ParamSpec] = &[spec(N, 1, 4, 6), spec(K, 0, 6, 10), spec(L, 0, 3, 5)];
const SYMMETRIC: &[ParamSpec] = &[spec(N, 1, 3, 6), spec(D, 0, 8, 12)];

pub static REGISTRY: &[Theorem] = &[
    Theorem {
        name: "gl-duality",
        statement: "|M_μν| = Σ_λ K_λν K_λμ for all margins: Sym^d(C^m ⊗ C^n) = ⊕ W^m_λ ⊗ W^n_λ",
        params: GL_PAIR,
        run: checks::gl_duality,
    },
    Theorem {
        name: "skew-gl-duality",
        statement: "|N_μν| = Σ_λ K_λ'ν K_λμ for all margins: ∧^d(C^m ⊗ C^n) = ⊕ W^m_λ ⊗ W^n_λ'",
        params: GL_PAIR,
        run: checks::skew_gl_duality,
    },
    Theorem {
        name: "gl-gelfand",
        statement: "⊕_{k+2l=d} Sym^k ⊗ Sym^l(∧²) contains every W_λ, λ ⊢ d, exactly once",
        params: &[spec(N, 1, 4, 6), spec(D, 0, 6, 10)],
        run: checks::gl_gelfand,
    },
    Theorem {
        name: "schuetzenberger",
        statement: "for symmetric A with rsk(A) = (P,P): trace(A) = number of odd columns of P",
        params: SYMMETRIC,
        run: checks::schuetzenberger,
    },
    Theorem {
        name: "refined-gl-gelfand",
        statement: "Sym^k ⊗ Sym^l(∧²) = ⊕ W_λ over λ ⊢ k+2l with k odd columns",
        params: GELFAND,
        run: checks::refined_gl_gelfand,
    },
    Theorem {
        name: "even-multiplicity",
        statement:
            "Sym^l(∧²) = ⊕ W_λ over λ ⊢ 2l with every part appearing an even number of times",
        params: &[spec(N, 1, 4, 6), spec(L, 0, 3, 5)],
        run: checks::even_multiplicity,
    },
    Theorem {
        name: "burge-schuetzenberger",
        statement: "for symmetric A with burge(A) = (P,P): odd diagonal entries = odd rows of P",
        params: SYMMETRIC,
        run: checks::burge_schuetzenberger,
    },
    Theorem {
        name: "burge-gelfand",
        statement: "∧^k ⊗ Sym^l(Sym²) = ⊕ W_λ over λ ⊢ k+2l with k odd rows",
        params: GELFAND,
        run: checks::burge_gelfand,
    },
    Theorem {
        name: "all-parts-even",
        statement: "Sym^k(Sym²) = ⊕ W_λ over λ ⊢ 2k with all parts even",
        params: &[spec(N, 1, 4, 6), spec(K, 0, 3, 5)],
        run: checks::all_parts_even,
    },
    Theorem {
        name: "threshold",
        statement: "∧^l(∧²) = ⊕_{λ ∈ TP(2l)} W_λ and ∧^l(Sym²) = ⊕_{λ' ∈ TP(2l)} W_λ; \
                    graphs with degree sequence μ biject with threshold-shape tableaux of weight μ",
        params: &[spec(N, 1, 5, 6), spec(L, 0, 4, 5)],
        run: checks::threshold,
    },
    Theorem {
        name: "rn-dimension",
        statement: "coefficient of x_1⋯x_n in s_λ = f^λ = χ^λ(id)",
        params: &[spec(N, 0, 6, 8), spec(Lambda, 0, 6, 8)],
        run: checks::rn_dimension,
    },
    Theorem {
        name: "schur-weyl",
        statement: "p_ρ(x_1,…,x_n) = Σ_{λ ⊢ m} χ^λ(ρ) s_λ(x_1,…,x_n) for all ρ ⊢ m",
        params: &[spec(M, 0, 5, 8), spec(N, 1, 3, 6)],
        run: checks::schur_weyl,
    },
    Theorem {
        name: "sn-gelfand",
        statement: "C[M_{n,k}] with sign (-1)^{i₁} = ⊕ V_λ over λ ⊢ n with k odd columns",
        params: &[spec(N, 0, 6, 8), spec(K, 0, 6, 8)],
        run: checks::sn_gelfand,
    },
    Theorem {
        name: "sn-rho2",
        statement: "C[M_{n,0}] with sign (-1)^{i₂} = ⊕_{λ ∈ TP(n)} V_λ",
        params: &[spec(N, 0, 6, 8)],
        run: checks::sn_rho2,
    },
    Theorem {
        name: "induced-identities",
        statement:
            "Ind(e_{2l} ⊗ 1) = ρ₁; Ind 1_B has all parts even; Ind η_m = ρ₂ = ⊕_{TP(2m)} V_λ",
        params: &[spec(N, 0, 6, 8)],
        run: checks::induced_identities,
    },
    Theorem {
        name: "bijections",
        statement: "rsk, dual rsk and burge are bijections onto tableau pairs of matching weight",
        params: &[spec(M, 1, 3, 5), spec(N, 1, 3, 5), spec(D, 0, 6, 8)],
        run: checks::bijections,
    },
    Theorem {
        name: "knuth-symmetry",
        statement: "rsk(Aᵀ) = (Q,P) and burge(Aᵀ) = (Q,P) whenever A ↦ (P,Q)",
        params: &[spec(N, 1, 3, 5), spec(D, 0, 6, 8)],
        run: checks::knuth_symmetry,
    },
];

pub fn theorem(name: &str) -> Result<&'static Theorem, HarnessError> {
    REGISTRY
        .iter()
        .find(|t| t.name == name)
        .ok_or_else(|| HarnessError::UnknownTheorem(name.to_string()))
}

/// Parameter ranges of one run.
pub(crate) struct Sweep<'a> {
    theorem: &'static Theorem,
    params: &'a Params,
    cap: usize,
}

impl Sweep<'_> {
    fn spec(&self, p: Param) -> ParamSpec {
        *self
            .theorem
            .params
            .iter()
            .find(|s| s.param == p)
            .expect("parameter declared by the theorem")
    }

    pub(crate) fn given(&self, p: Param) -> Option<usize> {
        self.params.get(p)
    }

    pub(crate) fn lambda(&self) -> Option<&Partition> {
        self.params.lambda.as_ref()
    }

    /// The pinned value, or the default range capped by the sweep bound.
    pub(crate) fn range(&self, p: Param) -> Vec<usize> {
        match self.given(p) {
            Some(v) => vec![v],
            None => {
                let s = self.spec(p);
                (s.lo..=s.desk.min(self.cap)).collect()
            }
        }
    }

    /// Largest default value of `p` under this sweep's bound.
    pub(crate) fn bound(&self, p: Param) -> usize {
        self.spec(p).desk.min(self.cap)
    }
}

fn validate(t: &'static Theorem, params: &Params) -> Result<(), HarnessError> {
    for p in params.given() {
        let Some(s) = t.params.iter().find(|s| s.param == p) else {
            return Err(HarnessError::IrrelevantParam {
                name: t.name.to_string(),
                param: p,
            });
        };
        let value = params.get(p).expect("given");
        if value < s.lo || value > s.hard {
            return Err(HarnessError::ParamOutOfRange {
                name: t.name.to_string(),
                param: p,
                value,
                lo: s.lo,
                hi: s.hard,
            });
        }
    }
    Ok(())
}

fn run(t: &'static Theorem, params: &Params, cap: usize) -> TheoremCase {
    let sweep = Sweep {
        theorem: t,
        params,
        cap,
    };
    let (status, reason, details) = match (t.run)(&sweep) {
        Outcome::Skipped(reason) => (Status::Skipped, Some(reason), Vec::new()),
        Outcome::Checked(details) => {
            let status = if details.iter().all(|d| d.ok) {
                Status::Verified
            } else {
                Status::Failed
            };
            (status, None, details)
        }
    };
    TheoremCase {
        name: t.name.to_string(),
        params: params.clone(),
        status,
        reason,
        details,
    }
}

/// Runs one registry entry.
pub fn verify(name: &str, params: &Params) -> Result<TheoremCase, HarnessError> {
    let t = theorem(name)?;
    validate(t, params)?;
    Ok(run(t, params, usize::MAX))
}

/// Human-readable notes for every given parameter above its desk-scale
/// default, where runtimes may grow quickly.
pub fn desk_scale_warnings(name: &str, params: &Params) -> Result<Vec<String>, HarnessError> {
    let t = theorem(name)?;
    Ok(t.params
        .iter()
        .filter_map(|s| {
            let v = params.get(s.param)?;
            (v > s.desk).then(|| {
                format!(
                    "{} = {v} exceeds the desk-scale bound {} for {}",
                    s.param, s.desk, t.name
                )
            })
        })
        .collect())
}

/// Every registry entry with all parameters swept up to
/// `min(default bound, max_size)`.
pub fn verify_all(max_size: usize) -> Vec<TheoremCase> {
    let params = Params::default();
    REGISTRY.iter().map(|t| run(t, &params, max_size)).collect()
}
