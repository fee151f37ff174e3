def rollout(state,
            oracle,
            strategy,
            observe,
            steps,
            rng=None,
            breaking_condition=None,
            on_step=None):
    '''
        Runs a query strategy against an oracle, starting from the given
        knowledge state. Each step the strategy picks a query from
        (state, history, rng), the oracle answers, and observe(state, v, r)
        returns the next state. Stops after `steps` queries, when the
        strategy returns None, or when breaking_condition(state) holds.
        Returns (final state, history of (query, response, state) triples).
    '''
    history, pairs = [], []
    for t in range(steps):
        if callable(breaking_condition) and breaking_condition(state):
            break
        v = strategy(state, pairs, rng)
        if v is None:
            break
        v = tuple(int(c) for c in v)
        r = oracle(v)
        state = observe(state, v, r)
        pairs.append((v, r))
        history.append((v, r, state))
        if callable(on_step):
            on_step(t, v, r, state)
    return state, history
