//! The USA/IPK word-of-mouth model.
//!
//! Each agent has an awareness state (Unaware, Seeking, Aware) and an
//! expertise state (Ignorant, Proactive, Knowledgeable), plus three fixed
//! boolean traits. Advertisement seeds awareness; curious agents that become
//! aware seek expert knowledge by querying neighbours one per round; agents
//! that cannot answer remember the requester and pass expertise back along
//! the resulting information gathering chain once they get it; enthusiastic
//! agents and aware-on-arrival supporters push knowledge to a random
//! neighbour each round for a fixed number of rounds.

mod world;

pub use world::{run, World};

use crate::error::{Error, Result};
use crate::graph::NodeId;
use crate::rng::RngSeed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AwarenessState {
    Unaware,
    Seeking,
    Aware,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExpertiseState {
    Ignorant,
    Proactive,
    Knowledgeable,
}

impl AwarenessState {
    pub const ALL: [AwarenessState; 3] = [Self::Unaware, Self::Seeking, Self::Aware];

    /// Knows the innovation exists.
    pub fn is_aware(self) -> bool {
        self != AwarenessState::Unaware
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Unaware => "unaware",
            Self::Seeking => "seeking",
            Self::Aware => "aware",
        }
    }
}

impl ExpertiseState {
    pub const ALL: [ExpertiseState; 3] = [Self::Ignorant, Self::Proactive, Self::Knowledgeable];

    pub fn holds_expertise(self) -> bool {
        self != ExpertiseState::Ignorant
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Ignorant => "ignorant",
            Self::Proactive => "proactive",
            Self::Knowledgeable => "knowledgeable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Traits {
    pub curious: bool,
    pub enthusiastic: bool,
    pub supporter: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agent {
    pub awareness: AwarenessState,
    pub expertise: ExpertiseState,
    pub traits: Traits,
    /// Seekers that queried this agent before it held expertise.
    pub pending_requesters: Vec<NodeId>,
    /// Neighbours still to query in the current seeking episode; popped from the back.
    pub unqueried_neighbors: Vec<NodeId>,
    pub promote_rounds_left: u32,
}

impl Agent {
    pub fn new(traits: Traits, expertise: ExpertiseState) -> Self {
        Agent {
            awareness: AwarenessState::Unaware,
            expertise,
            traits,
            pending_requesters: Vec::new(),
            unqueried_neighbors: Vec::new(),
            promote_rounds_left: 0,
        }
    }

    pub fn is_aware(&self) -> bool {
        self.awareness.is_aware()
    }

    pub fn holds_expertise(&self) -> bool {
        self.expertise.holds_expertise()
    }
}

/// Why an agent received awareness. Informational only; the transition is
/// the same for every cause.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AwarenessCause {
    Advertisement,
    Query,
    Promotion,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    /// Initial proportion of experts.
    pub k: f64,
    pub p_curious: f64,
    pub p_enthusiastic: f64,
    pub p_supporter: f64,
    /// Rounds of advertisement at the start of the run.
    pub ad_rounds: u32,
    /// Proportion of the population reached by each advertisement round.
    pub ad_share: f64,
    /// Rounds a proactive agent keeps promoting.
    pub t_promote: u32,
    /// Seekers with no neighbour left to query become Aware instead of idling.
    pub seeker_gives_up: bool,
    pub max_rounds: u32,
    pub seed: RngSeed,
}

impl SimConfig {
    pub const DEFAULT_AD_ROUNDS: u32 = 3;
    pub const DEFAULT_AD_SHARE: f64 = 0.02;
    pub const DEFAULT_T_PROMOTE: u32 = 100;
    pub const DEFAULT_MAX_ROUNDS: u32 = 1000;

    pub fn new(k: f64, p_curious: f64, p_enthusiastic: f64, p_supporter: f64, seed: RngSeed) -> Self {
        SimConfig {
            k,
            p_curious,
            p_enthusiastic,
            p_supporter,
            ad_rounds: Self::DEFAULT_AD_ROUNDS,
            ad_share: Self::DEFAULT_AD_SHARE,
            t_promote: Self::DEFAULT_T_PROMOTE,
            seeker_gives_up: true,
            max_rounds: Self::DEFAULT_MAX_ROUNDS,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, p) in [
            ("k", self.k),
            ("curious", self.p_curious),
            ("enthusiastic", self.p_enthusiastic),
            ("supporters", self.p_supporter),
            ("ad_share", self.ad_share),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParams(format!("{name} must lie in [0, 1], got {p}")));
            }
        }
        Ok(())
    }
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig::new(0.01, 0.0, 0.0, 0.0, RngSeed(0))
    }
}

/// `round(x·n)` with halves rounded up.
pub fn proportion_count(x: f64, n: usize) -> usize {
    ((x * n as f64) + 0.5).floor() as usize
}

/// Population counts for each (awareness, expertise) combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StateCounts(pub [u32; 9]);

impl StateCounts {
    pub fn index(a: AwarenessState, e: ExpertiseState) -> usize {
        a as usize * 3 + e as usize
    }

    pub fn tally<'a, I: IntoIterator<Item = &'a Agent>>(agents: I) -> Self {
        let mut counts = [0; 9];
        for agent in agents {
            counts[Self::index(agent.awareness, agent.expertise)] += 1;
        }
        StateCounts(counts)
    }

    pub fn get(&self, a: AwarenessState, e: ExpertiseState) -> u32 {
        self.0[Self::index(a, e)]
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn aware(&self) -> u32 {
        self.sum_where(|a, _| a.is_aware())
    }

    pub fn experts(&self) -> u32 {
        self.sum_where(|_, e| e.holds_expertise())
    }

    pub fn aware_and_expert(&self) -> u32 {
        self.sum_where(|a, e| a.is_aware() && e.holds_expertise())
    }

    fn sum_where(&self, pred: impl Fn(AwarenessState, ExpertiseState) -> bool) -> u32 {
        let mut sum = 0;
        for a in AwarenessState::ALL {
            for e in ExpertiseState::ALL {
                if pred(a, e) {
                    sum += self.get(a, e);
                }
            }
        }
        sum
    }

    /// Column names in index order, `<awareness>_<expertise>`.
    pub fn column_names() -> Vec<String> {
        AwarenessState::ALL
            .iter()
            .flat_map(|a| ExpertiseState::ALL.iter().map(move |e| format!("{}_{}", a.name(), e.name())))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimResult {
    pub final_aware_fraction: f64,
    /// Aware and holding expertise.
    pub final_both_fraction: f64,
    pub rounds_to_quiescence: u32,
    pub hit_max_rounds: bool,
    /// Entry 0 is the initial population; entry r the state after round r.
    pub time_series: Vec<StateCounts>,
}
