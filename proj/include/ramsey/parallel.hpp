#pragma once

namespace ramsey {

// Worker-count knob for the OpenMP kernels. 0 means "use the OpenMP default".
// Exact rational arithmetic makes every parallel reduction bit-identical to
// the serial one, so this only affects speed.
int max_threads();
void set_max_threads(int threads);

// Effective thread count for a loop of the given size.
int threads_for(long work_items);

} // namespace ramsey
