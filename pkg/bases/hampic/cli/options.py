from typer import Argument, Option

config_file = Argument(help="TOML run configuration, may name a preset.")
threads = Option(help="Worker threads for particle loops.")
thread_counts = Option("--threads", help="Comma separated thread counts, e.g. 1,2,4,8.")
out = Option(help="Output directory (overrides output.directory).")
seed = Option(help="Seed of the marker sampling.")
overrides = Option("--set", help="Override one key, section.key=value. Repeatable.")

verbose = Option(help="More verbose output.")
repeats = Option(help="Timed repetitions per phase; the median is reported.")

n_particles = Option("--np", help="Number of random particles (at most 4).")
field = Option(help="Magnetic field: constant, divfree or divful.")
all_fields = Option("--all", help="Check every named field.")
show_all = Option(help="List every index triple, not only the div B triples.")
richardson = Option(help="Richardson-extrapolate the finite differences.")
save = Option(help="Store the report as a text file.")

csv_file = Argument(help="Diagnostics CSV written by run.")
t_min = Option(help="Ignore samples before this time.")
max_peaks = Option(help="Use at most this many maxima.")
fallback = Option(help="Fit every sample when too few maxima are found.")

t_final = Option(help="Final time of every run in the study.")
