"""Default configuration values."""


def get_default_config():
    """Get default engine configuration.

    Returns:
        dict: Default configuration structure
    """
    return {
        'tau': 0.66,
        'p_max': 7,
        'delta': [0.25, 0.25, 0.25, 0.25],
        'salt_weight': 1e-10,
        'proximity_maxima': get_default_proximity_maxima(),
        'rng_seed': 0,
        'history_window': 256,
        'guard_fraction': 0.1,
        'hop_limit': 64
    }


def get_default_proximity_maxima():
    """Get default normalizer bounds for the proximity sub-grades.

    Returns:
        dict: hop_max in hops, rtt_max and pdv_max in seconds
    """
    return {
        'hop_max': 32,
        'rtt_max': 1.0,
        'pdv_max': 0.1
    }
