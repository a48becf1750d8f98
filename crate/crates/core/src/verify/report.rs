use std::fmt;

/// Outcome on one corpus instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InstanceVerdict {
    pub label: String,
    /// Answer on the source problem.
    pub source: Option<bool>,
    /// Answer on the constructed instance.
    pub target: Option<bool>,
    /// Mismatches, failed structural assertions and rejected certificates.
    pub failures: Vec<String>,
}

impl InstanceVerdict {
    pub fn new(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            ..Self::default()
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, what: impl Into<String>) {
        self.failures.push(what.into());
    }

    /// Records a failure unless `cond` holds.
    pub fn expect(&mut self, cond: bool, what: impl FnOnce() -> String) {
        if !cond {
            self.failures.push(what());
        }
    }

    /// Records `r`'s error as a failure tagged `what`, returning its value.
    pub fn check<T, E: fmt::Display>(&mut self, what: &str, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }

    /// Sets both answers and records a mismatch.
    pub fn answers(&mut self, source: bool, target: bool) {
        self.source = Some(source);
        self.target = Some(target);
        if source != target {
            self.fail(format!(
                "source answers {} but target answers {}",
                yes(source),
                yes(target)
            ));
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

/// Aggregate of a suite run. Passes iff no instance failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub suite: String,
    pub corpus: String,
    pub verdicts: Vec<InstanceVerdict>,
    /// Instances not run before the deadline.
    pub skipped: usize,
    pub notes: Vec<String>,
}

impl EquivalenceReport {
    /// Builds a report from per-instance results in corpus order; `None`
    /// marks an instance skipped for budget.
    pub fn collect(
        suite: impl Into<String>,
        corpus: impl Into<String>,
        results: impl IntoIterator<Item = Option<InstanceVerdict>>,
    ) -> Self {
        let mut verdicts = Vec::new();
        let mut skipped = 0;
        for r in results {
            match r {
                Some(v) => verdicts.push(v),
                None => skipped += 1,
            }
        }
        Self {
            suite: suite.into(),
            corpus: corpus.into(),
            verdicts,
            skipped,
            notes: Vec::new(),
        }
    }

    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.notes.push(line.into());
        self
    }

    pub fn instances(&self) -> usize {
        self.verdicts.len()
    }

    pub fn mismatches(&self) -> usize {
        self.verdicts.iter().filter(|v| !v.ok()).count()
    }

    pub fn passed(&self) -> bool {
        self.mismatches() == 0
    }

    pub fn incomplete(&self) -> bool {
        self.skipped > 0
    }

    pub fn counterexample(&self) -> Option<&InstanceVerdict> {
        self.verdicts.iter().find(|v| !v.ok())
    }

    /// `(source YES, source NO)` over decided instances.
    pub fn source_split(&self) -> (usize, usize) {
        let yes = self
            .verdicts
            .iter()
            .filter(|v| v.source == Some(true))
            .count();
        let no = self
            .verdicts
            .iter()
            .filter(|v| v.source == Some(false))
            .count();
        (yes, no)
    }

    /// `suite <id> pass|fail <instances> <mismatches>`.
    pub fn summary(&self) -> String {
        format!(
            "suite {} {} {} {}",
            self.suite,
            if self.passed() { "pass" } else { "fail" },
            self.instances(),
            self.mismatches()
        )
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "corpus {}", self.corpus)?;
        let (yes, no) = self.source_split();
        if yes + no > 0 {
            writeln!(f, "answers yes {yes} no {no}")?;
        }
        for n in &self.notes {
            writeln!(f, "note {n}")?;
        }
        if self.incomplete() {
            writeln!(f, "incomplete {} skipped", self.skipped)?;
        }
        if let Some(v) = self.counterexample() {
            writeln!(f, "counterexample {}", v.label)?;
            for line in &v.failures {
                writeln!(f, "  {line}")?;
            }
        }
        write!(f, "{}", self.summary())
    }
}
