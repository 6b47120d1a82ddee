# Check-digit code toolkit
