#ifndef GLNQ_GLNQ_HPP
#define GLNQ_GLNQ_HPP

#include <glnq/central_geometry.hpp>
#include <glnq/class_combinatorics.hpp>
#include <glnq/class_label.hpp>
#include <glnq/class_spec.hpp>
#include <glnq/cyclotomic.hpp>
#include <glnq/finite_field.hpp>
#include <glnq/frobenius.hpp>
#include <glnq/green_characters.hpp>
#include <glnq/matrix.hpp>
#include <glnq/numeric.hpp>
#include <glnq/oracle.hpp>
#include <glnq/partitions.hpp>
#include <glnq/symmetric_functions.hpp>

#endif
