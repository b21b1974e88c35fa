#include "g2kit/omega3.hpp"

namespace g2kit {

Form omega3_form() {
  Form w(7, 3);
  w += Form::basis(7, {1, 2, 7});
  w += Form::basis(7, {1, 3, 5});
  w -= Form::basis(7, {1, 4, 6});
  w -= Form::basis(7, {2, 3, 6});
  w -= Form::basis(7, {2, 4, 5});
  w += Form::basis(7, {3, 4, 7});
  w += Form::basis(7, {5, 6, 7});
  return w;
}

}  // namespace g2kit
