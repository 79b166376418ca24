def clear_operator_caches() -> None:
    """Drops the operators held by the factory caches, and with them their cached ket images."""
    from parapy.instances.operators import energy, even, gauge, modes, noncovariant, odd, spin

    for module in (energy, even, gauge, modes, noncovariant, odd, spin):
        for value in vars(module).values():
            if callable(getattr(value, "cache_clear", None)):
                value.cache_clear()
