# Why a maximal pair cannot have a joint measurement.
#
# On the certificate points the joint measurement's outcome probabilities
# are forced to 0 or 1, and one outcome would separate {x00, x10, x01} from
# {x11}. Those four points are affinely dependent, so no effect does that.
from gptmaxinc import zoo
from gptmaxinc.gpt import effect_from_functional
from gptmaxinc.maxinc import DiscriminationTask, find_discriminator, joint_would_discriminate

K = zoo.space("square")

# %% Discriminating two edges is easy
e = find_discriminator(K, DiscriminationTask([(0, 0), (0, 1)], [(1, 0), (1, 1)]))
print("edge discriminator, vertex values:", e)

# %% Discriminating the two diagonals is impossible
print("diagonals:", find_discriminator(K, DiscriminationTask([(0, 0), (1, 1)], [(1, 0), (0, 1)])))

# %% The forced outcome table of a maximal pair
f = effect_from_functional(K, (1, 0), 0)
g = effect_from_functional(K, (0, 1), 0)
forced = joint_would_discriminate(f, g)
for outcome, values in forced.table.items():
    print(f"{outcome:>8}:", ", ".join(map(str, values)))
print("an effect with those values exists:", forced.discriminator_exists)
