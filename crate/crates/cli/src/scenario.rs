//! Plain-text scenario files: `key = value`, one per line, `#` comments.
//! Golden scenarios diff cleanly in review; no binary formats.

use std::fmt;
use std::path::Path;

use assort_core::{
    Announcer, BeliefScript, FirmId, InfoPolicy, Regime, TieBreak, TypeAssignment, Universe,
    WorkerId, WorkerInfoMode, WorkerType,
};
use thiserror::Error;

/// A scenario configuration error, with the offending line when it comes
/// from a file.
#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("cannot read scenario: {0}")]
    Io(#[from] std::io::Error),
}

impl ScenarioError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ScenarioError::Parse {
            line,
            message: message.into(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    OneSided,
    TwoSided,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::OneSided => write!(f, "one_sided"),
            Kind::TwoSided => write!(f, "two_sided"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolicyChoice {
    Minimal,
    NtOnly,
    Rationalizable,
    Pathological(Vec<ScriptEntry>),
}

impl fmt::Display for PolicyChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolicyChoice::Minimal => write!(f, "minimal"),
            PolicyChoice::NtOnly => write!(f, "nt_only"),
            PolicyChoice::Rationalizable => write!(f, "rationalizable"),
            PolicyChoice::Pathological(_) => write!(f, "pathological"),
        }
    }
}

/// One scripted belief entry: the firm, the matched worker it observes, the
/// observed type, and the explicit candidate assignments (rank tuples).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScriptEntry {
    pub firm: usize,
    pub worker: usize,
    pub observed: usize,
    pub candidates: Vec<Vec<usize>>,
}

/// A fixed single-case run: one assignment, one deviator, one report.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedCase {
    pub assignment: Vec<usize>,
    pub firm_assignment: Option<Vec<usize>>,
    pub deviator: usize,
    pub report: usize,
}

/// A parsed scenario.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub kind: Kind,
    pub n: usize,
    pub worker_types: usize,
    pub firm_types: Option<usize>,
    pub mechanism: Announcer,
    pub regime: Regime,
    pub policy: PolicyChoice,
    pub tie_break: Vec<usize>,
    pub worker_info: WorkerInfoMode,
    pub fixed: Option<FixedCase>,
}

fn strip_prefix_letter(token: &str, letters: &[char]) -> String {
    let mut chars = token.chars();
    match chars.next() {
        Some(c) if letters.contains(&c) && chars.clone().all(|d| d.is_ascii_digit()) => {
            chars.collect()
        }
        _ => token.to_string(),
    }
}

fn parse_index(
    token: &str,
    letters: &[char],
    line: usize,
    what: &str,
) -> Result<usize, ScenarioError> {
    strip_prefix_letter(token, letters)
        .parse::<usize>()
        .ok()
        .filter(|&v| v >= 1)
        .ok_or_else(|| ScenarioError::at(line, format!("invalid {what} `{token}`")))
}

fn parse_index_list(
    value: &str,
    letters: &[char],
    line: usize,
    what: &str,
) -> Result<Vec<usize>, ScenarioError> {
    let tokens: Vec<&str> = value
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(ScenarioError::at(line, format!("empty {what}")));
    }
    tokens
        .into_iter()
        .map(|t| parse_index(t, letters, line, what))
        .collect()
}

impl Scenario {
    pub fn from_path(path: &Path) -> Result<Self, ScenarioError> {
        let text = std::fs::read_to_string(path)?;
        Scenario::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, ScenarioError> {
        let mut kind = Kind::OneSided;
        let mut n = None;
        let mut worker_types = None;
        let mut firm_types = None;
        let mut mechanism = None;
        let mut regime = Regime::Injective;
        let mut policy_name: Option<(String, usize)> = None;
        let mut scripts: Vec<ScriptEntry> = Vec::new();
        let mut tie_break: Vec<usize> = Vec::new();
        let mut worker_info = WorkerInfoMode::Inferred;
        let mut assignment = None;
        let mut firm_assignment = None;
        let mut deviator = None;
        let mut report = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| ScenarioError::at(line, "expected `key = value`"))?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "kind" => {
                    kind = match value {
                        "one_sided" => Kind::OneSided,
                        "two_sided" => Kind::TwoSided,
                        other => {
                            return Err(ScenarioError::at(line, format!("unknown kind `{other}`")))
                        }
                    }
                }
                "n" => {
                    n = Some(value.parse::<usize>().map_err(|_| {
                        ScenarioError::at(line, format!("invalid worker count `{value}`"))
                    })?)
                }
                "l" => {
                    worker_types = Some(value.parse::<usize>().map_err(|_| {
                        ScenarioError::at(line, format!("invalid type count `{value}`"))
                    })?)
                }
                "s" => {
                    firm_types = Some(value.parse::<usize>().map_err(|_| {
                        ScenarioError::at(line, format!("invalid firm type count `{value}`"))
                    })?)
                }
                "mechanism" => {
                    mechanism = Some(match value {
                        "empty" => Announcer::Empty,
                        "informative_public" => Announcer::InformativePublic,
                        "lower_contour" => Announcer::LowerContour,
                        "matched_report" => Announcer::MatchedReport,
                        other => {
                            return Err(ScenarioError::at(
                                line,
                                format!("unknown mechanism `{other}`"),
                            ))
                        }
                    })
                }
                "regime" => {
                    regime = match value {
                        "injective" => Regime::Injective,
                        "full" => Regime::Full,
                        other => {
                            return Err(ScenarioError::at(
                                line,
                                format!("unknown regime `{other}`"),
                            ))
                        }
                    }
                }
                "policy" => policy_name = Some((value.to_string(), line)),
                "tie_break" => {
                    tie_break = parse_index_list(value, &[], line, "tie-break rank")?;
                }
                "worker_info" => {
                    worker_info = match value {
                        "inferred" => WorkerInfoMode::Inferred,
                        "collapsed" => WorkerInfoMode::Collapsed,
                        other => {
                            return Err(ScenarioError::at(
                                line,
                                format!("unknown worker_info `{other}`"),
                            ))
                        }
                    }
                }
                "assignment" => {
                    assignment = Some(parse_index_list(value, &['t'], line, "type rank")?)
                }
                "firm_assignment" => {
                    firm_assignment = Some(parse_index_list(value, &['s'], line, "firm type rank")?)
                }
                "deviator" => deviator = Some(parse_index(value, &['j'], line, "worker")?),
                "report" => report = Some(parse_index(value, &['t'], line, "type rank")?),
                "script" => scripts.push(parse_script_entry(value, line)?),
                other => {
                    return Err(ScenarioError::at(line, format!("unknown key `{other}`")));
                }
            }
        }

        let n = n.ok_or_else(|| ScenarioError::Invalid("missing `n`".into()))?;
        let worker_types =
            worker_types.ok_or_else(|| ScenarioError::Invalid("missing `l`".into()))?;
        if n == 0 {
            return Err(ScenarioError::Invalid("`n` must be at least 1".into()));
        }
        if worker_types <= n {
            return Err(ScenarioError::Invalid(format!(
                "`l` must exceed `n`: got n = {n}, l = {worker_types}"
            )));
        }
        let policy = match policy_name {
            None => PolicyChoice::Rationalizable,
            Some((s, line)) => match s.as_str() {
                "minimal" => PolicyChoice::Minimal,
                "nt_only" => PolicyChoice::NtOnly,
                "rationalizable" => PolicyChoice::Rationalizable,
                "pathological" => {
                    if scripts.is_empty() {
                        return Err(ScenarioError::at(
                            line,
                            "policy `pathological` requires at least one `script` entry",
                        ));
                    }
                    PolicyChoice::Pathological(std::mem::take(&mut scripts))
                }
                other => return Err(ScenarioError::at(line, format!("unknown policy `{other}`"))),
            },
        };
        if !scripts.is_empty() && !matches!(policy, PolicyChoice::Pathological(_)) {
            return Err(ScenarioError::Invalid(
                "`script` entries require `policy = pathological`".into(),
            ));
        }
        if !tie_break.is_empty() {
            TieBreak::new(tie_break.clone()).map_err(|e| ScenarioError::Invalid(e.to_string()))?;
            if tie_break.len() != n {
                return Err(ScenarioError::Invalid(format!(
                    "tie-break lists {} ranks for {n} workers",
                    tie_break.len()
                )));
            }
        }
        match kind {
            Kind::OneSided => {
                if mechanism.is_none() {
                    return Err(ScenarioError::Invalid("missing `mechanism`".into()));
                }
            }
            Kind::TwoSided => {
                let s = firm_types
                    .ok_or_else(|| ScenarioError::Invalid("two_sided scenarios need `s`".into()))?;
                if s <= n {
                    return Err(ScenarioError::Invalid(format!(
                        "`s` must exceed `n`: got n = {n}, s = {s}"
                    )));
                }
            }
        }
        let fixed = match (assignment, deviator, report) {
            (None, None, None) => None,
            (Some(assignment), Some(deviator), Some(report)) => {
                if assignment.len() != n {
                    return Err(ScenarioError::Invalid(format!(
                        "assignment lists {} types for {n} workers",
                        assignment.len()
                    )));
                }
                if assignment.iter().any(|&r| r > worker_types) || report > worker_types {
                    return Err(ScenarioError::Invalid(
                        "assignment or report outside the type scale".into(),
                    ));
                }
                if deviator > n {
                    return Err(ScenarioError::Invalid(format!(
                        "deviator j{deviator} outside the market"
                    )));
                }
                if let Some(f) = &firm_assignment {
                    if f.len() != n {
                        return Err(ScenarioError::Invalid(format!(
                            "firm_assignment lists {} types for {n} firms",
                            f.len()
                        )));
                    }
                }
                Some(FixedCase {
                    assignment,
                    firm_assignment,
                    deviator,
                    report,
                })
            }
            _ => {
                return Err(ScenarioError::Invalid(
                    "a fixed case needs `assignment`, `deviator`, and `report` together".into(),
                ))
            }
        };
        if kind == Kind::TwoSided {
            if let Some(fixed) = &fixed {
                if fixed.firm_assignment.is_none() {
                    return Err(ScenarioError::Invalid(
                        "two_sided fixed cases need `firm_assignment`".into(),
                    ));
                }
            }
        }
        Ok(Scenario {
            kind,
            n,
            worker_types,
            firm_types,
            mechanism: mechanism.unwrap_or(Announcer::InformativePublic),
            regime,
            policy,
            tie_break,
            worker_info,
            fixed,
        })
    }

    pub fn tie_break_rule(&self) -> TieBreak {
        if self.tie_break.is_empty() {
            TieBreak::identity(self.n)
        } else {
            TieBreak::new(self.tie_break.clone()).expect("validated at parse time")
        }
    }

    /// Converts the parsed policy into the core policy, materializing
    /// scripted beliefs against the universe.
    pub fn build_policy(&self, universe: &Universe) -> Result<InfoPolicy, ScenarioError> {
        match &self.policy {
            PolicyChoice::Minimal => Ok(InfoPolicy::Minimal),
            PolicyChoice::NtOnly => Ok(InfoPolicy::NontrivialOnly),
            PolicyChoice::Rationalizable => Ok(InfoPolicy::Rationalizable),
            PolicyChoice::Pathological(entries) => {
                let mut script = BeliefScript::new();
                for entry in entries {
                    if entry.firm > self.n || entry.worker > self.n {
                        return Err(ScenarioError::Invalid(format!(
                            "script entry references i{} / j{} outside the market",
                            entry.firm, entry.worker
                        )));
                    }
                    if entry.observed > self.worker_types {
                        return Err(ScenarioError::Invalid(format!(
                            "script entry observes t{} outside the scale",
                            entry.observed
                        )));
                    }
                    let mut candidates = Vec::new();
                    for ranks in &entry.candidates {
                        if ranks.len() != self.n || ranks.iter().any(|&r| r > self.worker_types) {
                            return Err(ScenarioError::Invalid(
                                "script candidate is not a valid assignment".into(),
                            ));
                        }
                        let cand = TypeAssignment::from_ranks(ranks).map_err(|e| {
                            ScenarioError::Invalid(format!("script candidate invalid: {e}"))
                        })?;
                        if universe.id_of(&cand).is_none() {
                            return Err(ScenarioError::Invalid(
                                "script candidate outside the assignment universe".into(),
                            ));
                        }
                        candidates.push(cand);
                    }
                    script.insert(
                        FirmId::from_index(entry.firm - 1),
                        WorkerId::from_index(entry.worker - 1),
                        WorkerType::from_rank(entry.observed),
                        candidates,
                    );
                }
                Ok(InfoPolicy::Pathological(script))
            }
        }
    }
}

fn parse_script_entry(value: &str, line: usize) -> Result<ScriptEntry, ScenarioError> {
    let (head, tail) = value
        .split_once(':')
        .ok_or_else(|| ScenarioError::at(line, "script entry needs `firm worker type : ...`"))?;
    let head_tokens: Vec<&str> = head.split_whitespace().collect();
    if head_tokens.len() != 3 {
        return Err(ScenarioError::at(
            line,
            "script entry head must be `<firm> <worker> <observed type>`",
        ));
    }
    let firm = parse_index(head_tokens[0], &['i'], line, "firm")?;
    let worker = parse_index(head_tokens[1], &['j'], line, "worker")?;
    let observed = parse_index(head_tokens[2], &['t'], line, "type rank")?;
    let mut candidates = Vec::new();
    for part in tail.split('|') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        candidates.push(parse_index_list(part, &['t'], line, "type rank")?);
    }
    if candidates.is_empty() {
        return Err(ScenarioError::at(line, "script entry lists no candidates"));
    }
    Ok(ScriptEntry {
        firm,
        worker,
        observed,
        candidates,
    })
}
