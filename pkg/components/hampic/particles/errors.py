from hampic.fem import OutOfDomain


class ParticleOutOfDomain(OutOfDomain):
    """A marker left a DirichletZero domain, where no periodic wrap applies."""
