// Walks the constructive route on one diagram: wideness check, block
// allocation, embedding, reconstruction, and the extracted Latin filling.

#include <iostream>

#include "widealloc/widealloc.hpp"

int main() {
  const widealloc::YoungDiagram y =
      widealloc::YoungDiagram::from_row_lengths({5, 4, 3, 3});
  std::cout << "diagram " << y.to_text() << "\n\n"
            << widealloc::render_diagram_ascii(y) << "\n";

  const widealloc::WidenessReport wide = widealloc::is_wide_fast(y);
  std::cout << "wide: " << (wide.wide ? "yes" : "no") << " (" << wide.checks
            << " checks, " << wide.skipped_implied + wide.skipped_trivial
            << " skipped)\n\n";

  const widealloc::PipelineResult out = widealloc::fill_via_allocation(y);
  std::cout << "allocation:\n";
  for (int i = 1; i <= out.allocation.num_blocks(); ++i)
    for (int j = 1; j <= i; ++j)
      for (int k = 1; k <= i; ++k)
        if (out.allocation.z(i, j, k) != 0)
          std::cout << "  z(" << i << "," << j << "," << k << ") = "
                    << out.allocation.z(i, j, k) << "\n";

  std::cout << "\nLatin filling:\n"
            << widealloc::render_filling_ascii(out.filling);
  return 0;
}
