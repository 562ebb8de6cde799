use std::fmt::Write as _;

use faro_core::{
    boundary_plan, build, color_period, elmsley_plan, shuffle_period, single_shuffle_shortcut,
    BoundaryRole, DeckTracker, Family, Move, Permutation, ShufflePlan, ShuffleSpec,
};
use serde::Serialize;

use crate::{DeckArgs, Format, PlanMode};

/// Largest deck whose period is recomputed from its cycles.
pub const ORACLE_LIMIT: usize = 512;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    CrossCheck(String),
}

impl From<faro_core::Error> for CliError {
    fn from(e: faro_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
}

impl Output {
    fn text(stdout: String) -> Self {
        Self {
            stdout,
            warnings: Vec::new(),
        }
    }
}

type CmdResult = Result<Output, CliError>;

fn spec_of(deck: &DeckArgs) -> Result<ShuffleSpec, CliError> {
    Ok(ShuffleSpec::from_cards(
        deck.family,
        deck.cards,
        deck.packets,
    )?)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn csv_rows<I, R>(rows: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .from_writer(Vec::new());
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn base_for(family: Family, base: Option<u8>) -> usize {
    base.map_or(family.default_base(), usize::from)
}

#[derive(Serialize)]
struct PeriodReport {
    family: &'static str,
    cards: usize,
    packets: usize,
    period: u64,
    oracle: Option<u64>,
    color_period: Option<u64>,
}

pub fn period(deck: &DeckArgs, format: Format) -> CmdResult {
    let spec = spec_of(deck)?;
    let period = shuffle_period(&spec)?;
    let checked = spec.deck_size() <= ORACLE_LIMIT;
    let oracle = checked.then(|| build(&spec).order());
    if let Some(o) = oracle {
        if o != period {
            return Err(CliError::CrossCheck(format!(
                "{spec}: congruence gives period {period}, cycles give {o}"
            )));
        }
    }
    let color = if checked && spec.family().is_even_deck() {
        Some(color_period(&spec)?)
    } else {
        None
    };
    let report = PeriodReport {
        family: spec.family().name(),
        cards: spec.deck_size(),
        packets: spec.packets(),
        period,
        oracle,
        color_period: color,
    };
    let opt = |v: Option<u64>| v.map_or(String::new(), |v| v.to_string());
    let stdout = match format {
        Format::Json => json(&report),
        Format::Csv => csv_rows([
            vec![
                "family".to_string(),
                "cards".into(),
                "packets".into(),
                "period".into(),
                "oracle".into(),
                "color_period".into(),
            ],
            vec![
                report.family.to_string(),
                report.cards.to_string(),
                report.packets.to_string(),
                period.to_string(),
                opt(oracle),
                opt(color),
            ],
        ])?,
        Format::Text => {
            let mut s = format!("{spec}\nperiod: {period}\n");
            match oracle {
                Some(o) => writeln!(s, "oracle: {o}").unwrap(),
                None => writeln!(s, "oracle: skipped (more than {ORACLE_LIMIT} cards)").unwrap(),
            }
            if let Some(c) = color {
                writeln!(s, "color period: {c}").unwrap();
            }
            s
        }
    };
    Ok(Output::text(stdout))
}

const TABLE_ROWS: [(&str, Family); 3] = [
    ("in-shuffle", Family::InShuffle),
    ("in-Monge", Family::MongeH1),
    ("out-Monge", Family::MongeH2),
];

#[derive(Serialize)]
struct TableReport {
    cards: Vec<usize>,
    rows: Vec<TableRow>,
}

#[derive(Serialize)]
struct TableRow {
    name: &'static str,
    family: &'static str,
    periods: Vec<u64>,
}

pub fn table(max_cards: usize, format: Format) -> CmdResult {
    if max_cards < 2 || !max_cards.is_multiple_of(2) {
        return Err(CliError::Usage(format!(
            "--max-cards must be an even number >= 2, got {max_cards}"
        )));
    }
    let cards: Vec<usize> = (2..=max_cards).step_by(2).collect();
    let mut rows = Vec::new();
    for (name, family) in TABLE_ROWS {
        let periods = cards
            .iter()
            .map(|&c| shuffle_period(&ShuffleSpec::from_cards(family, c, None)?))
            .collect::<faro_core::Result<Vec<u64>>>()?;
        rows.push(TableRow {
            name,
            family: family.name(),
            periods,
        });
    }
    let stdout = match format {
        Format::Json => json(&TableReport { cards, rows }),
        Format::Csv => {
            let header =
                std::iter::once("2n".to_string()).chain(cards.iter().map(usize::to_string));
            let body = rows.iter().map(|r| {
                std::iter::once(r.name.to_string())
                    .chain(r.periods.iter().map(u64::to_string))
                    .collect::<Vec<_>>()
            });
            csv_rows(std::iter::once(header.collect::<Vec<_>>()).chain(body))?
        }
        Format::Text => {
            let label = TABLE_ROWS.iter().map(|(n, _)| n.len()).max().unwrap_or(2);
            let mut s = String::new();
            for (chunk_idx, chunk) in cards.chunks(8).enumerate() {
                if chunk_idx > 0 {
                    s.push('\n');
                }
                let start = chunk_idx * 8;
                let cell = |v: String| format!("{v:>5}");
                write!(s, "{:<label$}", "2n").unwrap();
                for c in chunk {
                    s.push_str(&cell(c.to_string()));
                }
                s.push('\n');
                for r in &rows {
                    write!(s, "{:<label$}", r.name).unwrap();
                    for p in &r.periods[start..start + chunk.len()] {
                        s.push_str(&cell(p.to_string()));
                    }
                    s.push('\n');
                }
            }
            s
        }
    };
    Ok(Output::text(stdout))
}

#[derive(Serialize)]
struct OrbitReport {
    family: &'static str,
    cards: usize,
    base: usize,
    power: i64,
    orbits: Vec<Vec<usize>>,
}

pub fn orbits(
    deck: &DeckArgs,
    base: Option<u8>,
    power: i64,
    traversal: bool,
    format: Format,
) -> CmdResult {
    let spec = spec_of(deck)?;
    let base = base_for(spec.family(), base);
    let p = build(&spec).power(power);
    // Traversal lists the positions a card visits, i.e. cycles of card -> new position.
    let raw = if traversal {
        p.inverse().orbit_decomposition().orbits().to_vec()
    } else {
        p.orbit_decomposition().sorted_sets()
    };
    let orbits: Vec<Vec<usize>> = raw
        .into_iter()
        .map(|o| o.into_iter().map(|x| x + base).collect())
        .collect();
    let stdout = match format {
        Format::Json => json(&OrbitReport {
            family: spec.family().name(),
            cards: spec.deck_size(),
            base,
            power,
            orbits,
        }),
        Format::Csv => csv_rows(
            std::iter::once(vec!["min".to_string(), "size".into(), "members".into()]).chain(
                orbits
                    .iter()
                    .map(|o| vec![o[0].to_string(), o.len().to_string(), join(o)]),
            ),
        )?,
        Format::Text => orbits
            .iter()
            .map(|o| format!("{}: {}\n", o[0], join(o)))
            .collect(),
    };
    Ok(Output::text(stdout))
}

#[derive(Serialize)]
struct PlanReport {
    cards: usize,
    card: usize,
    target: usize,
    plan: String,
    trajectory: Vec<usize>,
}

fn half_deck(cards: usize) -> Result<usize, CliError> {
    if cards < 2 || !cards.is_multiple_of(2) {
        return Err(CliError::Usage(format!(
            "--cards must be an even number >= 2, got {cards}"
        )));
    }
    Ok(cards / 2)
}

pub fn plan(mode: &PlanMode) -> CmdResult {
    let (plan, card, target, cards, format) = match *mode {
        PlanMode::Move {
            card,
            to,
            cards,
            format,
        } => {
            half_deck(cards)?;
            if !cards.is_power_of_two() {
                return Err(CliError::Usage(format!(
                    "plan move needs a power-of-two deck, got {cards} cards"
                )));
            }
            let p = cards.trailing_zeros();
            (
                elmsley_plan(card as u64, to as u64, p)?,
                card,
                to,
                cards,
                format,
            )
        }
        PlanMode::BottomTo { to, cards, format } => {
            let plan = boundary_plan(BoundaryRole::BottomTo, to, half_deck(cards)?)?;
            (plan, 0, to, cards, format)
        }
        PlanMode::TopTo { to, cards, format } => {
            let plan = boundary_plan(BoundaryRole::TopTo, to, half_deck(cards)?)?;
            (plan, cards - 1, to, cards, format)
        }
        PlanMode::ToBottom {
            card,
            cards,
            format,
        } => {
            let plan = boundary_plan(BoundaryRole::ToBottom, card, half_deck(cards)?)?;
            (plan, card, 0, cards, format)
        }
        PlanMode::ToTop {
            card,
            cards,
            format,
        } => {
            let plan = boundary_plan(BoundaryRole::ToTop, card, half_deck(cards)?)?;
            (plan, card, cards - 1, cards, format)
        }
    };
    report_plan(plan, card, target, cards, format)
}

fn report_plan(
    plan: ShufflePlan,
    card: usize,
    target: usize,
    cards: usize,
    format: Format,
) -> CmdResult {
    let tracker = DeckTracker::new(cards / 2)?;
    let mut trajectory = vec![card];
    trajectory.extend(tracker.trajectory(&plan, card)?);
    let end = *trajectory.last().expect("starts with the card");
    if end != target {
        return Err(CliError::CrossCheck(format!(
            "plan {plan} leaves card {card} at {end}, not {target}"
        )));
    }
    let mut warnings = Vec::new();
    if let Some(m) = single_shuffle_shortcut(&plan, card, target, &tracker) {
        let name = match m {
            Move::I => "in-shuffle",
            Move::O => "out-shuffle",
        };
        warnings.push(format!(
            "plan is not minimal: a single {name} ({}) already moves card {card} to {target}",
            m.letter()
        ));
    }
    let letters = plan.to_string();
    let stdout = match format {
        Format::Json => json(&PlanReport {
            cards,
            card,
            target,
            plan: letters,
            trajectory,
        }),
        Format::Csv => csv_rows([
            vec!["cards", "card", "target", "plan", "trajectory"]
                .into_iter()
                .map(String::from)
                .collect(),
            vec![
                cards.to_string(),
                card.to_string(),
                target.to_string(),
                letters,
                join(&trajectory),
            ],
        ])?,
        Format::Text => format!("plan: {letters}\ntrajectory: {}\n", join(&trajectory)),
    };
    Ok(Output { stdout, warnings })
}

#[derive(Serialize)]
struct SimulateReport {
    family: &'static str,
    cards: usize,
    base: usize,
    decks: Vec<Vec<usize>>,
}

pub fn simulate(deck: &DeckArgs, steps: usize, base: Option<u8>, format: Format) -> CmdResult {
    let spec = spec_of(deck)?;
    let base = base_for(spec.family(), base);
    let p: Permutation = build(&spec);
    let mut current: Vec<usize> = (base..base + spec.deck_size()).collect();
    let mut decks = vec![current.clone()];
    for _ in 0..steps {
        current = p.apply(&current)?;
        decks.push(current.clone());
    }
    let stdout = match format {
        Format::Json => json(&SimulateReport {
            family: spec.family().name(),
            cards: spec.deck_size(),
            base,
            decks,
        }),
        Format::Csv => csv_rows(decks.iter().enumerate().map(|(step, d)| {
            std::iter::once(step.to_string())
                .chain(d.iter().map(usize::to_string))
                .collect::<Vec<_>>()
        }))?,
        Format::Text => decks.iter().map(|d| format!("{}\n", join(d))).collect(),
    };
    Ok(Output::text(stdout))
}
