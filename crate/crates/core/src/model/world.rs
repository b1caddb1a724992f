use rand_chacha::ChaCha8Rng;

use super::{
    proportion_count, Agent, AwarenessCause, AwarenessState, ExpertiseState, SimConfig, SimResult, StateCounts, Traits,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::rng::{sample_indices, shuffle, stream, uniform_index};

/// A population of agents living on a graph.
///
/// Agent `i` sits on node `i`. All randomness after initialisation comes from
/// the config seed's dynamics stream; initialisation uses one stream for the
/// expert sample and one per trait, so the four samples are independent.
#[derive(Debug, Clone)]
pub struct World<'g> {
    graph: &'g Graph,
    cfg: SimConfig,
    agents: Vec<Agent>,
    rng: ChaCha8Rng,
    round: u32,
    order: Vec<NodeId>,
}

impl<'g> World<'g> {
    /// Everyone starts Unaware; exactly `round(k·N)` uniformly chosen agents
    /// start Knowledgeable and `round(p·N)` agents receive each trait.
    pub fn new(graph: &'g Graph, cfg: SimConfig) -> Result<Self> {
        cfg.validate()?;
        let n = graph.node_count();
        let pick = |stream_id: u64, p: f64| -> Vec<bool> {
            let mut rng = cfg.seed.stream(stream_id);
            let mut chosen = vec![false; n];
            for i in sample_indices(&mut rng, n, proportion_count(p, n).min(n)) {
                chosen[i] = true;
            }
            chosen
        };
        let experts = pick(stream::INIT_EXPERTISE, cfg.k);
        let curious = pick(stream::INIT_CURIOUS, cfg.p_curious);
        let enthusiastic = pick(stream::INIT_ENTHUSIASTIC, cfg.p_enthusiastic);
        let supporter = pick(stream::INIT_SUPPORTER, cfg.p_supporter);

        let agents = (0..n)
            .map(|i| {
                let traits = Traits { curious: curious[i], enthusiastic: enthusiastic[i], supporter: supporter[i] };
                let expertise = if experts[i] { ExpertiseState::Knowledgeable } else { ExpertiseState::Ignorant };
                Agent::new(traits, expertise)
            })
            .collect();

        Ok(World { graph, cfg, agents, rng: cfg.seed.stream(stream::DYNAMICS), round: 0, order: (0..n).collect() })
    }

    pub fn agents(&self) -> &[Agent] {
        &self.agents
    }

    pub fn agent(&self, id: NodeId) -> Result<&Agent> {
        self.agents.get(id).ok_or(Error::UnknownAgent(id))
    }

    /// Mutable access for setting up scenarios by hand.
    pub fn agent_mut(&mut self, id: NodeId) -> Result<&mut Agent> {
        self.agents.get_mut(id).ok_or(Error::UnknownAgent(id))
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn config(&self) -> &SimConfig {
        &self.cfg
    }

    /// Rounds completed so far.
    pub fn round(&self) -> u32 {
        self.round
    }

    pub fn counts(&self) -> StateCounts {
        StateCounts::tally(&self.agents)
    }

    /// Gives awareness to an agent. Returns whether anything changed.
    ///
    /// An expert that learns about the innovation becomes Aware, and starts
    /// promoting if it is a supporter. An ignorant curious agent starts
    /// seeking, with its whole neighbourhood (shuffled) to query. Anyone else
    /// simply becomes Aware. Already-aware agents are left untouched.
    pub fn deliver_awareness(&mut self, id: NodeId, cause: AwarenessCause) -> Result<bool> {
        if id >= self.agents.len() {
            return Err(Error::UnknownAgent(id));
        }
        Ok(self.awareness(id, cause))
    }

    /// Gives expertise to an agent and, through the gathering chain, to every
    /// agent waiting on it. Returns whether anything changed.
    pub fn deliver_expertise(&mut self, id: NodeId) -> Result<bool> {
        if id >= self.agents.len() {
            return Err(Error::UnknownAgent(id));
        }
        Ok(self.expertise(id))
    }

    fn awareness(&mut self, id: NodeId, _cause: AwarenessCause) -> bool {
        let t_promote = self.cfg.t_promote;
        let agent = &mut self.agents[id];
        if agent.awareness != AwarenessState::Unaware {
            return false;
        }
        if agent.holds_expertise() {
            agent.awareness = AwarenessState::Aware;
            if agent.traits.supporter && agent.expertise == ExpertiseState::Knowledgeable {
                agent.expertise = ExpertiseState::Proactive;
                agent.promote_rounds_left = t_promote;
            }
        } else if agent.traits.curious {
            agent.awareness = AwarenessState::Seeking;
            agent.unqueried_neighbors.clear();
            agent.unqueried_neighbors.extend_from_slice(self.graph.neighbors(id));
            shuffle(&mut self.rng, &mut agent.unqueried_neighbors);
        } else {
            agent.awareness = AwarenessState::Aware;
        }
        true
    }

    fn expertise(&mut self, id: NodeId) -> bool {
        if self.agents[id].holds_expertise() {
            return false;
        }
        let t_promote = self.cfg.t_promote;
        // Each pass turns one ignorant agent into an expert, so the chain
        // walk ends after at most N iterations.
        let mut chain = vec![id];
        while let Some(a) = chain.pop() {
            let agent = &mut self.agents[a];
            if agent.holds_expertise() {
                continue;
            }
            if agent.traits.enthusiastic {
                agent.expertise = ExpertiseState::Proactive;
                agent.promote_rounds_left = t_promote;
            } else {
                agent.expertise = ExpertiseState::Knowledgeable;
            }
            if agent.awareness == AwarenessState::Seeking {
                agent.awareness = AwarenessState::Aware;
                agent.unqueried_neighbors.clear();
            }
            chain.extend(agent.pending_requesters.drain(..).rev());
        }
        true
    }

    fn is_active(&self, agent: &Agent) -> bool {
        match (agent.awareness, agent.expertise) {
            (_, ExpertiseState::Proactive) => true,
            (AwarenessState::Seeking, _) => !agent.unqueried_neighbors.is_empty() || self.cfg.seeker_gives_up,
            _ => false,
        }
    }

    /// Advertisement is over and no agent can still change anything.
    pub fn is_quiescent(&self) -> bool {
        self.round >= self.cfg.ad_rounds && !self.agents.iter().any(|a| self.is_active(a))
    }

    /// One round: advertisement (while the campaign lasts), then every agent
    /// acts once in a fresh random order, with effects visible immediately.
    pub fn step(&mut self) {
        #[cfg(debug_assertions)]
        let before: Vec<(bool, bool)> = self.agents.iter().map(|a| (a.is_aware(), a.holds_expertise())).collect();

        self.round += 1;
        let n = self.agents.len();

        if self.round <= self.cfg.ad_rounds {
            let reach = proportion_count(self.cfg.ad_share, n).min(n);
            for id in sample_indices(&mut self.rng, n, reach) {
                self.awareness(id, AwarenessCause::Advertisement);
            }
        }

        let mut order = std::mem::take(&mut self.order);
        shuffle(&mut self.rng, &mut order);
        for &id in &order {
            self.act(id);
        }
        self.order = order;

        #[cfg(debug_assertions)]
        for (agent, (was_aware, was_expert)) in self.agents.iter().zip(before) {
            debug_assert!(!was_aware || agent.is_aware(), "awareness lost");
            debug_assert!(!was_expert || agent.holds_expertise(), "expertise lost");
            debug_assert!(
                agent.awareness != AwarenessState::Seeking || (agent.traits.curious && !agent.holds_expertise()),
                "illegal seeker"
            );
        }
    }

    fn act(&mut self, id: NodeId) {
        let agent = &self.agents[id];
        match (agent.awareness, agent.expertise) {
            (_, ExpertiseState::Proactive) => self.promote(id),
            (AwarenessState::Seeking, _) => self.seek(id),
            _ => {}
        }
    }

    fn seek(&mut self, id: NodeId) {
        let Some(target) = self.agents[id].unqueried_neighbors.pop() else {
            if self.cfg.seeker_gives_up {
                self.agents[id].awareness = AwarenessState::Aware;
            }
            return;
        };
        self.awareness(target, AwarenessCause::Query);
        if self.agents[target].holds_expertise() {
            self.expertise(id);
        } else {
            self.agents[target].pending_requesters.push(id);
        }
    }

    fn promote(&mut self, id: NodeId) {
        let degree = self.graph.degree(id);
        if degree > 0 {
            let target = self.graph.neighbors(id)[uniform_index(&mut self.rng, degree)];
            self.awareness(target, AwarenessCause::Promotion);
            self.expertise(target);
        }
        let agent = &mut self.agents[id];
        agent.promote_rounds_left = agent.promote_rounds_left.saturating_sub(1);
        if agent.promote_rounds_left == 0 {
            agent.expertise = ExpertiseState::Knowledgeable;
        }
    }

    /// Final fractions and time series for the current state.
    fn result(&self, time_series: Vec<StateCounts>, hit_max_rounds: bool) -> SimResult {
        let counts = self.counts();
        let n = self.agents.len().max(1) as f64;
        SimResult {
            final_aware_fraction: counts.aware() as f64 / n,
            final_both_fraction: counts.aware_and_expert() as f64 / n,
            rounds_to_quiescence: self.round,
            hit_max_rounds,
            time_series,
        }
    }
}

/// Runs until quiescence or `max_rounds`.
pub fn run(graph: &Graph, cfg: SimConfig) -> Result<SimResult> {
    let mut world = World::new(graph, cfg)?;
    let mut series = vec![world.counts()];
    let mut hit_max_rounds = false;
    while !world.is_quiescent() {
        if world.round() >= cfg.max_rounds {
            hit_max_rounds = true;
            break;
        }
        world.step();
        series.push(world.counts());
    }
    Ok(world.result(series, hit_max_rounds))
}
